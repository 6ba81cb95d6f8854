#include "permaspin/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permaspin {

namespace {
constexpr int kMaxK = 10;  // guard against factorial blowup
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int k = static_cast<int>(images_.size());
    if (k == 0) throw std::invalid_argument("Permutation: empty image list");
    std::vector<char> seen(static_cast<size_t>(k), 0);
    for (int v : images_) {
        if (v < 1 || v > k || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("Permutation: images must be a bijection on {1..k}");
        seen[static_cast<size_t>(v - 1)] = 1;
    }
}

Permutation Permutation::identity(int k) {
    if (k < 1) throw std::invalid_argument("Permutation::identity: k must be >= 1");
    std::vector<int> images(static_cast<size_t>(k));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> images;
    if (text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos) {
        int cur = -1;
        for (char ch : text) {
            if (ch >= '0' && ch <= '9') {
                cur = (cur < 0 ? 0 : cur) * 10 + (ch - '0');
            } else if (ch == ',' || ch == ' ') {
                if (cur >= 0) images.push_back(cur);
                cur = -1;
            } else {
                throw std::invalid_argument("Permutation::parse: bad character");
            }
        }
        if (cur >= 0) images.push_back(cur);
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("Permutation::parse: digit strings use 1..9");
            images.push_back(ch - '0');
        }
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>(apply(i) - 1)] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (apply(i) != i) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    if (size() <= 9) {
        for (int v : images_) out.push_back(static_cast<char>('0' + v));
    } else {
        for (size_t i = 0; i < images_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(images_[i]);
        }
    }
    return out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size())
        throw std::invalid_argument("compose: length mismatch");
    std::vector<int> images(static_cast<size_t>(sigma.size()));
    for (int i = 1; i <= sigma.size(); ++i)
        images[static_cast<size_t>(i - 1)] = sigma.apply(tau.apply(i));
    return Permutation(std::move(images));
}

int descents(const Permutation& pi) {
    int count = 0;
    for (int i = 1; i < pi.size(); ++i)
        if (pi.apply(i) > pi.apply(i + 1)) ++count;
    return count;
}

int inversions(const Permutation& pi) {
    int count = 0;
    for (int i = 1; i < pi.size(); ++i)
        for (int j = i + 1; j <= pi.size(); ++j)
            if (pi.apply(i) > pi.apply(j)) ++count;
    return count;
}

int destat(const Permutation& pi) { return descents(pi) + descents(pi.inverse()); }

int stat_max(StatKind kind, int k) {
    if (k < 1) throw std::invalid_argument("stat_max: k must be >= 1");
    switch (kind) {
        case StatKind::Des: return k - 1;
        case StatKind::Inv: return k * (k - 1) / 2;
        case StatKind::Destat: return 2 * (k - 1);
    }
    throw std::invalid_argument("stat_max: unknown statistic");
}

int statistic(StatKind kind, const Permutation& pi) {
    switch (kind) {
        case StatKind::Des: return descents(pi);
        case StatKind::Inv: return inversions(pi);
        case StatKind::Destat: return destat(pi);
    }
    throw std::invalid_argument("statistic: unknown statistic");
}

bool inversion_symmetric(StatKind kind) { return kind != StatKind::Des; }

const char* stat_name(StatKind kind) {
    switch (kind) {
        case StatKind::Des: return "des";
        case StatKind::Inv: return "inv";
        case StatKind::Destat: return "destat";
    }
    return "?";
}

StatKind stat_from_name(std::string_view name) {
    if (name == "des") return StatKind::Des;
    if (name == "inv") return StatKind::Inv;
    if (name == "destat") return StatKind::Destat;
    throw std::invalid_argument("stat_from_name: expected des, inv or destat");
}

namespace {

// Depth-first search for an occurrence: positions chosen left to right,
// order-isomorphy checked incrementally against already-chosen entries.
bool find_occurrence(const Permutation& pi, const Permutation& pattern,
                     std::vector<int>& chosen, int from) {
    const int m = pattern.size();
    const int placed = static_cast<int>(chosen.size());
    if (placed == m) return true;
    for (int pos = from; pos <= pi.size() - (m - placed) + 1; ++pos) {
        const int value = pi.apply(pos);
        bool consistent = true;
        for (int j = 0; j < placed; ++j) {
            const bool pat_less = pattern.apply(j + 1) < pattern.apply(placed + 1);
            const bool val_less = chosen[static_cast<size_t>(j)] < value;
            if (pat_less != val_less) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        chosen.push_back(value);
        if (find_occurrence(pi, pattern, chosen, pos + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains_pattern(const Permutation& pi, const Permutation& pattern) {
    if (pattern.size() > pi.size()) return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(pattern.size()));
    return find_occurrence(pi, pattern, chosen, 1);
}

SpinSet::SpinSet(int k, std::vector<Permutation> members, std::string label)
    : k_(k), members_(std::move(members)), label_(std::move(label)) {}

SpinSet SpinSet::full(int k) {
    if (k < 1 || k > kMaxK) throw std::invalid_argument("SpinSet::full: k out of range [1,10]");
    std::vector<int> images(static_cast<size_t>(k));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> members;
    do {
        members.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return SpinSet(k, std::move(members), "S" + std::to_string(k));
}

SpinSet SpinSet::avoiding(int k, const std::vector<Permutation>& patterns) {
    if (patterns.empty())
        throw std::invalid_argument("SpinSet::avoiding: pattern list must be nonempty");
    for (const auto& p : patterns)
        if (p.size() > k)
            throw std::invalid_argument("SpinSet::avoiding: pattern longer than k");
    SpinSet all = full(k);
    std::vector<Permutation> members;
    for (const auto& pi : all.members()) {
        bool avoids = true;
        for (const auto& pat : patterns) {
            if (contains_pattern(pi, pat)) {
                avoids = false;
                break;
            }
        }
        if (avoids) members.push_back(pi);
    }
    std::string label = "S" + std::to_string(k) + "(";
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (i) label += ",";
        label += patterns[i].to_string();
    }
    label += ")";
    return SpinSet(k, std::move(members), std::move(label));
}

SpinSet SpinSet::of(int k, std::vector<Permutation> members) {
    if (members.empty()) throw std::invalid_argument("SpinSet::of: empty member list");
    for (const auto& pi : members)
        if (pi.size() != k) throw std::invalid_argument("SpinSet::of: member of wrong length");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return SpinSet(k, std::move(members), "explicit");
}

int SpinSet::index_of(const Permutation& pi) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), pi);
    if (it == members_.end() || !(*it == pi)) return -1;
    return static_cast<int>(it - members_.begin());
}

}  // namespace permaspin
