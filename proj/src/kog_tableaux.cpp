#include "ogring/kog_tableaux.hpp"
#include <mutex>

#include <algorithm>
#include <limits>

namespace ogring {

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] <= 0) throw invalid_input("partition parts must be positive");
        if (k > 0 && parts[k - 1] <= parts[k]) throw invalid_input("partition parts must strictly decrease");
    }
}

StrictPartition StrictPartition::from_mask(Mask m) {
    StrictPartition p;
    p.parts = mask_indices_desc(m);
    return p;
}

Mask StrictPartition::to_mask() const {
    Mask m = 0;
    for (int part : parts) {
        if (part > kMaxIndex) throw invalid_input("part too large for mask encoding");
        m |= bit_of(part);
    }
    return m;
}

int StrictPartition::size() const {
    int s = 0;
    for (int part : parts) s += part;
    return s;
}

SkewShiftedShape SkewShiftedShape::make(StrictPartition outer, StrictPartition inner) {
    if (inner.length() > outer.length()) throw invalid_input("inner partition longer than outer");
    for (int k = 0; k < inner.length(); ++k)
        if (inner.parts[k] > outer.parts[k]) throw invalid_input("inner partition not contained in outer");
    SkewShiftedShape s;
    s.outer = std::move(outer);
    s.inner = std::move(inner);
    for (int k = 0; k < s.outer.length(); ++k) {
        int row = k + 1;
        int lo = row + (k < s.inner.length() ? s.inner.parts[k] : 0);
        int hi = row + s.outer.parts[k] - 1;
        for (int col = lo; col <= hi; ++col) s.boxes.emplace_back(row, col);
    }
    return s;
}

bool SkewShiftedShape::contains(int row, int col) const {
    if (row < 1 || row > outer.length()) return false;
    int k = row - 1;
    int lo = row + (k < inner.length() ? inner.parts[k] : 0);
    int hi = row + outer.parts[k] - 1;
    return col >= lo && col <= hi;
}

std::string SkewShiftedShape::ascii() const {
    std::string out;
    for (int k = 0; k < outer.length(); ++k) {
        int row = k + 1;
        for (int col = 1; col <= row + outer.parts[k] - 1; ++col)
            out += contains(row, col) ? "[ ]" : " . ";
        out += "\n";
    }
    return out;
}

std::vector<int> KOGTableau::content() const {
    std::vector<int> c = labels;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

bool is_rim(const SkewShiftedShape& shape) {
    for (const auto& [r1, c1] : shape.boxes)
        for (const auto& [r2, c2] : shape.boxes)
            if (r2 > r1 && c2 > c1) return false;
    return true;
}

namespace {

// Per-box DFS metadata; boxes visited bottom row up, left to right within a
// row, so left/below neighbours and the whole south-west region are placed
// before the box itself.
struct BoxInfo {
    int orig;             // index into shape.boxes
    int row, col;
    int left = -1;        // DFS index of (row, col-1) if in shape
    int below = -1;       // DFS index of (row+1, col) if in shape
    std::vector<int> sw;  // DFS indices of boxes strictly south-west
};

struct Enumerator {
    const SkewShiftedShape& shape;
    int imax;
    const std::function<void(const KOGTableau&)>* visit;
    std::vector<BoxInfo> order;
    std::vector<int> labels_dfs;
    std::vector<int> labels_orig;
    std::uint64_t used = 0;
    long long count = 0;

    Enumerator(const SkewShiftedShape& s, int imax_, const std::function<void(const KOGTableau&)>* v)
        : shape(s), imax(imax_), visit(v) {
        const auto& boxes = shape.boxes;
        std::vector<int> idx(boxes.size());
        for (size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (boxes[a].first != boxes[b].first) return boxes[a].first > boxes[b].first;
            return boxes[a].second < boxes[b].second;
        });
        order.resize(idx.size());
        for (size_t k = 0; k < idx.size(); ++k) {
            BoxInfo& info = order[k];
            info.orig = idx[k];
            info.row = boxes[idx[k]].first;
            info.col = boxes[idx[k]].second;
            for (size_t j = 0; j < k; ++j) {
                if (order[j].row == info.row && order[j].col == info.col - 1) info.left = static_cast<int>(j);
                if (order[j].row == info.row + 1 && order[j].col == info.col) info.below = static_cast<int>(j);
                // south-west: weakly south and weakly west of the box
                if (order[j].row >= info.row && order[j].col <= info.col) info.sw.push_back(static_cast<int>(j));
            }
        }
        labels_dfs.assign(order.size(), 0);
        labels_orig.assign(order.size(), 0);
    }

    int missing() const { return imax - std::popcount(used); }

    void run(size_t at) {
        if (at == order.size()) {
            if (missing() != 0) return;
            ++count;
            if (visit) {
                for (size_t k = 0; k < order.size(); ++k) labels_orig[order[k].orig] = labels_dfs[k];
                KOGTableau t;
                t.shape = &shape;
                t.labels = labels_orig;
                (*visit)(t);
            }
            return;
        }
        const BoxInfo& b = order[at];
        int lo = 1, hi = imax;
        if (b.left >= 0) lo = std::max(lo, labels_dfs[b.left] + 1);
        if (b.below >= 0) hi = std::min(hi, labels_dfs[b.below] - 1);
        if (lo > hi) return;
        int sw_min = std::numeric_limits<int>::max(), sw_max = 0;
        for (int j : b.sw) {
            sw_min = std::min(sw_min, labels_dfs[j]);
            sw_max = std::max(sw_max, labels_dfs[j]);
        }
        int remaining = static_cast<int>(order.size() - at) - 1;
        for (int v = lo; v <= hi; ++v) {
            if (!b.sw.empty() && v > sw_min && v < sw_max) continue;
            std::uint64_t vb = std::uint64_t(1) << (v - 1);
            std::uint64_t prev = used;
            used |= vb;
            if (missing() <= remaining) {
                labels_dfs[at] = v;
                run(at + 1);
            }
            used = prev;
        }
    }
};

}  // namespace

long long count_kog(const SkewShiftedShape& shape, int content_max,
                    const std::function<void(const KOGTableau&)>& visit) {
    if (content_max < 1) throw invalid_input("content bound must be positive");
    if (!is_rim(shape)) return 0;
    if (shape.box_count() < content_max) return 0;
    Enumerator e(shape, content_max, visit ? &visit : nullptr);
    e.run(0);
    return e.count;
}

long long count_kog(const SkewShiftedShape& shape, int content_max) {
    return count_kog(shape, content_max, nullptr);
}

bool kog_valid(const KOGTableau& t, int content_max) {
    if (!t.shape) return false;
    const auto& boxes = t.shape->boxes;
    if (t.labels.size() != boxes.size()) return false;
    for (int v : t.labels)
        if (v < 1) return false;
    auto label_at = [&](int row, int col) -> int {
        for (size_t k = 0; k < boxes.size(); ++k)
            if (boxes[k].first == row && boxes[k].second == col) return t.labels[k];
        return -1;
    };
    if (!is_rim(*t.shape)) return false;
    for (size_t a = 0; a < boxes.size(); ++a) {
        auto [r, c] = boxes[a];
        int right = label_at(r, c + 1);
        if (right >= 0 && right <= t.labels[a]) return false;
        int below = label_at(r + 1, c);
        if (below >= 0 && below <= t.labels[a]) return false;
        bool all_le = true, all_ge = true;
        for (size_t b = 0; b < boxes.size(); ++b) {
            if (b == a) continue;
            if (boxes[b].first >= r && boxes[b].second <= c) {
                if (t.labels[b] > t.labels[a]) all_ge = false;
                if (t.labels[b] < t.labels[a]) all_le = false;
            }
        }
        if (!all_le && !all_ge) return false;
    }
    auto content = t.content();
    if (static_cast<int>(content.size()) != content_max) return false;
    for (int k = 0; k < content_max; ++k)
        if (content[k] != k + 1) return false;
    return true;
}

bool kog_remark_holds(const KOGTableau& t) {
    const auto& boxes = t.shape->boxes;
    auto in_shape = [&](int row, int col) {
        return t.shape->contains(row, col);
    };
    for (size_t a = 0; a < boxes.size(); ++a) {
        auto [r, c] = boxes[a];
        bool has_left = in_shape(r, c - 1);
        bool has_below = in_shape(r + 1, c);
        for (size_t b = 0; b < boxes.size(); ++b) {
            if (b == a) continue;
            if (boxes[b].first >= r && boxes[b].second <= c) {
                if (has_left && t.labels[b] > t.labels[a]) return false;
                if (has_below && t.labels[b] < t.labels[a]) return false;
            }
        }
    }
    return true;
}

namespace {

// Enumerate Pieri candidates nu over lambda: componentwise containment,
// strictly decreasing parts bounded by n, at most one new row, and the rim
// condition maintained incrementally via the least min-column seen so far.
void enumerate_candidates(const StrictPartition& lambda, int i, int n,
                          const std::function<void(const std::vector<int>&)>& emit) {
    const int len = lambda.length();
    constexpr int kNoBound = std::numeric_limits<int>::max() - 4;
    std::vector<int> nu(len, 0);

    // prev = nu of the previous row, bound = min over nonempty processed rows
    // of their min column (row + inner part); the rim condition forces the max
    // column of any later nonempty row to stay <= bound.
    auto rec = [&](auto&& self, int k, int prev, int bound) -> void {
        if (k == len + 1) {
            std::vector<int> parts(nu.begin(), nu.end());
            emit(parts);
            int row = len + 1;
            int hi = std::min({prev - 1, i, bound - row + 1, n});
            for (int d = 1; d <= hi; ++d) {
                parts.push_back(d);
                emit(parts);
                parts.pop_back();
            }
            return;
        }
        int lam = lambda.parts[k - 1];
        nu[k - 1] = lam;  // row left empty
        self(self, k + 1, lam, bound);
        // extended row: max column k + nu_k - 1 <= bound, length <= i
        int hi = std::min({prev - 1, n, lam + i, bound - k + 1});
        for (int v = lam + 1; v <= hi; ++v) {
            nu[k - 1] = v;
            self(self, k + 1, v, std::min(bound, k + lam));
        }
        nu[k - 1] = lam;
    };
    rec(rec, 1, kNoBound, kNoBound);
}

std::vector<std::pair<Mask, long long>> pieri_terms(const StrictPartition& lambda, int i, int n) {
    if (i < 1 || i > n) throw invalid_input("pieri index out of range");
    std::vector<std::pair<Mask, long long>> out;
    if (!lambda.in_range(n)) return out;  // zero class
    enumerate_candidates(lambda, i, n, [&](const std::vector<int>& parts) {
        int extra = 0;
        for (size_t k = 0; k < parts.size(); ++k)
            extra += parts[k] - (k < static_cast<size_t>(lambda.length()) ? lambda.parts[k] : 0);
        if (extra < i) return;
        StrictPartition nu{std::vector<int>(parts)};
        auto shape = SkewShiftedShape::make(nu, lambda);
        long long c = count_kog(shape, i);
        if (c == 0) return;
        long long sign = ((extra - i) % 2 == 0) ? 1 : -1;
        out.emplace_back(nu.to_mask(), sign * c);
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::map<StrictPartition, long long> pieri_coefficients(const StrictPartition& lambda, int i, int n) {
    std::map<StrictPartition, long long> out;
    for (const auto& [mask, c] : pieri_terms(lambda, i, n)) out.emplace(StrictPartition::from_mask(mask), c);
    return out;
}

PieriCache::PieriCache(int n) : n_(n) {
    if (n < 1 || n > kMaxIndex) throw invalid_input("generator count n out of range");
}

const PieriExpansion& PieriCache::expansion(Mask lambda, int i) {
    if (i < 1 || i > n_) throw invalid_input("pieri index out of range");
    std::uint64_t key = lambda | (static_cast<std::uint64_t>(i) << kMaxIndex);
    {
        std::shared_lock lk(mx_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
    }
    PieriExpansion exp;
    exp.terms = pieri_terms(StrictPartition::from_mask(lambda), i, n_);
    std::unique_lock lk(mx_);
    auto [it, _] = map_.emplace(key, std::move(exp));
    return it->second;
}

}  // namespace ogring
