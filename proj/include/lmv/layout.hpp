#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lmv/errors.hpp"

namespace lmv {

/// Named variable blocks of a polynomial ring. At most two blocks: the image
/// line block and an optional camera parameter block. The canonical layouts
/// enumerate l_{i,j} coordinate-major (i outer, j inner), then parameters in
/// the same sweep (t_{i,j}) or v_1..v_m.
class VariableLayout {
public:
    struct Block {
        std::string name;
        std::vector<std::string> vars;
    };

    explicit VariableLayout(std::vector<Block> blocks);

    int nvars() const { return total_; }
    int nblocks() const { return static_cast<int>(blocks_.size()); }
    const Block& block(int b) const { return blocks_[b]; }
    int block_begin(int b) const { return begins_[b]; }
    int block_end(int b) const { return begins_[b] + static_cast<int>(blocks_[b].vars.size()); }
    /// End of block 0; for single-block layouts this equals nvars().
    int first_block_end() const { return nblocks() > 1 ? block_end(0) : total_; }

    const std::string& var_name(int i) const { return names_[i]; }
    const std::vector<std::string>& var_names() const { return names_; }
    int index_of(const std::string& name) const;
    bool has_var(const std::string& name) const;

    friend bool operator==(const VariableLayout& a, const VariableLayout& b);
    friend bool operator!=(const VariableLayout& a, const VariableLayout& b) { return !(a == b); }

private:
    std::vector<Block> blocks_;
    std::vector<std::string> names_;
    std::vector<int> begins_;
    int total_;
};

using LayoutPtr = std::shared_ptr<const VariableLayout>;

/// "l_<i>_<j>" for coordinate i of the line of camera j (1-based).
std::string line_var_name(int i, int j);
std::string translation_var_name(int i, int j);
std::string collinear_var_name(int j);

/// C[l] for m cameras: l_1_1 .. l_1_m, l_2_1 .. l_3_m.
LayoutPtr line_layout(int m);
/// C[l, t]: line block followed by t_1_1 .. t_3_m.
LayoutPtr line_translation_layout(int m);
/// C[l, v]: line block followed by v_1 .. v_m.
LayoutPtr line_collinear_layout(int m);

/// Number of cameras a canonical layout describes.
int camera_count(const VariableLayout& layout);

}  // namespace lmv
