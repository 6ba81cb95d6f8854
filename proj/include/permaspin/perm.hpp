#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace permaspin {

// A spin value: permutation of {1..k} in one-line notation.
// Immutable after construction; compares lexicographically.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int k);
    // Accepts digit strings ("231", k <= 9) or comma/space separated entries.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(images_.size()); }
    // 1-based application: pi(i).
    int apply(int i) const { return images_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    std::string to_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

// Function composition: result(i) = sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);

int descents(const Permutation& pi);
int inversions(const Permutation& pi);
// des(pi) + des(pi^{-1}); symmetric under inversion, max 2(k-1) on S_k.
int destat(const Permutation& pi);

enum class StatKind { Des, Inv, Destat };

// Largest value the statistic attains on S_k.
int stat_max(StatKind kind, int k);
int statistic(StatKind kind, const Permutation& pi);
// Whether stat(pi) == stat(pi^{-1}) holds for every permutation.
bool inversion_symmetric(StatKind kind);
const char* stat_name(StatKind kind);
StatKind stat_from_name(std::string_view name);

// Classical containment: some subsequence of pi is order-isomorphic to pattern.
bool contains_pattern(const Permutation& pi, const Permutation& pattern);

// Ordered (lexicographic) allowed-spin set P, a subset of S_k.
class SpinSet {
public:
    // All k! permutations, 1 <= k <= 10.
    static SpinSet full(int k);
    // { pi in S_k : pi contains none of the patterns }; patterns must be
    // nonempty, each of length <= k.
    static SpinSet avoiding(int k, const std::vector<Permutation>& patterns);
    static SpinSet of(int k, std::vector<Permutation> members);

    int k() const { return k_; }
    int size() const { return static_cast<int>(members_.size()); }
    const Permutation& member(int i) const { return members_[static_cast<size_t>(i)]; }
    const std::vector<Permutation>& members() const { return members_; }
    const std::string& label() const { return label_; }
    int index_of(const Permutation& pi) const;  // -1 if absent

private:
    SpinSet(int k, std::vector<Permutation> members, std::string label);

    int k_;
    std::vector<Permutation> members_;
    std::string label_;
};

}  // namespace permaspin
