#include "lmv/layout.hpp"

#include <unordered_set>

namespace lmv {

VariableLayout::VariableLayout(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty() || blocks_.size() > 2) throw InputError("layout needs 1 or 2 blocks");
    std::unordered_set<std::string> seen;
    int at = 0;
    for (const Block& b : blocks_) {
        begins_.push_back(at);
        for (const std::string& v : b.vars) {
            if (!seen.insert(v).second) throw InputError("duplicate variable name: " + v);
            names_.push_back(v);
            ++at;
        }
    }
    total_ = at;
}

int VariableLayout::index_of(const std::string& name) const {
    for (int i = 0; i < total_; ++i)
        if (names_[i] == name) return i;
    throw UnknownVariable("unknown variable: " + name);
}

bool VariableLayout::has_var(const std::string& name) const {
    for (const std::string& n : names_)
        if (n == name) return true;
    return false;
}

bool operator==(const VariableLayout& a, const VariableLayout& b) {
    if (a.blocks_.size() != b.blocks_.size()) return false;
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
        if (a.blocks_[i].name != b.blocks_[i].name) return false;
        if (a.blocks_[i].vars != b.blocks_[i].vars) return false;
    }
    return true;
}

std::string line_var_name(int i, int j) {
    return "l_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string translation_var_name(int i, int j) {
    return "t_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string collinear_var_name(int j) { return "v_" + std::to_string(j); }

namespace {

VariableLayout::Block line_block(int m) {
    VariableLayout::Block b{"l", {}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= m; ++j) b.vars.push_back(line_var_name(i, j));
    return b;
}

}  // namespace

LayoutPtr line_layout(int m) {
    return std::make_shared<VariableLayout>(std::vector<VariableLayout::Block>{line_block(m)});
}

LayoutPtr line_translation_layout(int m) {
    VariableLayout::Block t{"t", {}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= m; ++j) t.vars.push_back(translation_var_name(i, j));
    return std::make_shared<VariableLayout>(
        std::vector<VariableLayout::Block>{line_block(m), std::move(t)});
}

LayoutPtr line_collinear_layout(int m) {
    VariableLayout::Block v{"v", {}};
    for (int j = 1; j <= m; ++j) v.vars.push_back(collinear_var_name(j));
    return std::make_shared<VariableLayout>(
        std::vector<VariableLayout::Block>{line_block(m), std::move(v)});
}

int camera_count(const VariableLayout& layout) {
    const int lvars = layout.nblocks() > 1 ? layout.block_end(0) : layout.nvars();
    if (lvars % 3 != 0) throw InputError("layout line block is not 3m variables");
    return lvars / 3;
}

}  // namespace lmv
