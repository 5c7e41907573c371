#pragma once

#include "ogring/core.hpp"

#include <functional>
#include <map>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace ogring {

// Strict partition: strictly decreasing positive parts.  Parts larger than
// the ambient bound n are legal and denote the zero Schubert class.
struct StrictPartition {
    std::vector<int> parts;

    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> p);

    static StrictPartition from_mask(Mask m);  // descending indices of m
    Mask to_mask() const;                      // requires all parts <= kMaxIndex

    int size() const;            // |lambda|
    int length() const { return static_cast<int>(parts.size()); }
    bool in_range(int n) const { return parts.empty() || parts.front() <= n; }

    bool operator==(const StrictPartition& o) const { return parts == o.parts; }
    bool operator<(const StrictPartition& o) const { return parts < o.parts; }
};

// Skew shifted shape nu/lambda.  Row r of the shifted diagram of mu occupies
// columns [r, r + mu_r - 1]; the skew boxes are boxes(nu) \ boxes(lambda),
// stored in row-major order.
struct SkewShiftedShape {
    StrictPartition outer, inner;
    std::vector<std::pair<int, int>> boxes;  // (row, col), 1-based

    static SkewShiftedShape make(StrictPartition outer, StrictPartition inner);

    int box_count() const { return static_cast<int>(boxes.size()); }
    bool contains(int row, int col) const;
    std::string ascii() const;  // diagnostic grid
};

// Labeling of a shape's boxes, parallel to shape.boxes.
struct KOGTableau {
    const SkewShiftedShape* shape = nullptr;
    std::vector<int> labels;

    std::vector<int> content() const;  // sorted distinct labels
};

// True iff no box lies strictly south and strictly east of another.
bool is_rim(const SkewShiftedShape& shape);

// Number of labelings with content exactly [1, content_max] satisfying the
// strict row/column increase and the south-west comparability condition.
// Non-rim shapes admit no tableaux.
long long count_kog(const SkewShiftedShape& shape, int content_max);
long long count_kog(const SkewShiftedShape& shape, int content_max,
                    const std::function<void(const KOGTableau&)>& visit);

// Re-validates a labeling directly against the definition: strict increase
// along rows and columns, and each box comparable with its whole south-west
// region.  Written as full scans, independent of the enumerator's pruning.
bool kog_valid(const KOGTableau& t, int content_max);

// A box with a left neighbour in the shape is >= all boxes south-west of it;
// a box with a below neighbour is <= all of them.
bool kog_remark_holds(const KOGTableau& t);

// Signed Pieri coefficients: nu -> (-1)^{|nu/lambda| - i} * C^nu_{lambda,i},
// over strict partitions nu in [1,n] with lambda <= nu and l(nu) <= l(lambda)+1.
// Zero coefficients omitted; lambda out of [1,n] gives the empty map.
std::map<StrictPartition, long long> pieri_coefficients(const StrictPartition& lambda, int i, int n);

// Expansion with mask-encoded shapes, cached.  Shared by the Rees engine.
struct PieriExpansion {
    std::vector<std::pair<Mask, long long>> terms;  // sorted by mask
};

class PieriCache {
public:
    explicit PieriCache(int n);

    int n() const { return n_; }
    // 1 <= i <= n required; lambda must fit in a mask.
    const PieriExpansion& expansion(Mask lambda, int i);

private:
    int n_;
    std::unordered_map<std::uint64_t, PieriExpansion> map_;
    std::shared_mutex mx_;
};

}  // namespace ogring
