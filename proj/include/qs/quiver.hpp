#pragma once

#include "qs/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qs {

// Dimension vectors and characters are indexed by vertex position; the quiver
// owns the label <-> index correspondence used by serialization.
using DimVector = std::vector<long long>;
using Character = std::vector<Rat>;

// Finite quiver, loops and parallel arrows allowed.  Only the arrow counts
// n_ij matter for the forms; they are derived from the arrow list once.
class Quiver {
  public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices,
           std::vector<std::pair<int, int>> arrows);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }

    // -1 when absent.
    int index_of(const std::string& label) const;
    bool has_vertex(const std::string& label) const { return index_of(label) >= 0; }

    // Arrow count from i to j (ordered); loop count when i == j.
    int arrow_count(int i, int j) const { return counts_[i][j]; }
    int loop_count(int i) const { return counts_[i][i]; }
    bool loop_free(int i) const { return counts_[i][i] == 0; }
    // Total arrows between distinct i and j, both orientations.
    int pair_count(int i, int j) const { return counts_[i][j] + counts_[j][i]; }

  private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> arrows_;
    std::vector<std::vector<int>> counts_;
};

// Framed datum: base quiver, dimension vector v, framing vector w (both
// indexed by the base quiver's vertices, entries >= 0).
struct FramedSetting {
    Quiver quiver;
    DimVector v;
    DimVector w;
};

void validate_dim(const Quiver& q, const DimVector& v, const char* what);

// Single vertex "0" with `loops` loops.
Quiver flower_quiver(int loops);
// Flower with dimension n and framing w at the unique vertex.
FramedSetting flower_setting(int n, int loops, int w);

} // namespace qs
