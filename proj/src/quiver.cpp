#include "qs/quiver.hpp"

#include <stdexcept>
#include <unordered_set>

namespace qs {

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::pair<int, int>> arrows)
    : labels_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second)
            throw std::invalid_argument("duplicate vertex label '" + l + "'");
    }
    int n = num_vertices();
    counts_.assign(n, std::vector<int>(n, 0));
    for (auto [t, h] : arrows_) {
        if (t < 0 || t >= n || h < 0 || h >= n)
            throw std::invalid_argument("arrow endpoint out of range");
        ++counts_[t][h];
    }
}

int Quiver::index_of(const std::string& label) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

void validate_dim(const Quiver& q, const DimVector& v, const char* what) {
    if (static_cast<int>(v.size()) != q.num_vertices())
        throw std::invalid_argument(std::string(what) +
                                    ": length does not match vertex count");
}

Quiver flower_quiver(int loops) {
    if (loops < 0) throw std::invalid_argument("negative loop count");
    std::vector<std::pair<int, int>> arrows(loops, {0, 0});
    return Quiver({"0"}, std::move(arrows));
}

FramedSetting flower_setting(int n, int loops, int w) {
    if (n < 0 || w < 0) throw std::invalid_argument("negative flower parameter");
    return FramedSetting{flower_quiver(loops), {n}, {w}};
}

} // namespace qs
