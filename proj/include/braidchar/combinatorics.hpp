#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace braidchar {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Integer partition, stored with parts in weakly decreasing order.
///
/// Doubles as a cycle type of S_n. The multiplicity form (m_1, ..., m_n) is
/// derived on demand and never stored.
class Partition {
public:
    Partition() = default;

    /// Parts may be given in any order; they are sorted into weakly
    /// decreasing order. Throws std::invalid_argument on a non-positive part.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "4,3,2,1". The empty string is the empty partition.
    static Partition parse(std::string_view text);

    /// The partition (1, 1, ..., 1) of n.
    static Partition ones(int n);

    /// Partition in Frobenius coordinates (a_1, ..., a_r | b_1, ..., b_r):
    /// a_i boxes right of and b_i boxes below the diagonal box (i, i).
    /// Both lists must be strictly decreasing, non-negative, of equal length.
    static Partition from_frobenius(std::span<const int> arms, std::span<const int> legs);

    [[nodiscard]] std::span<const int> parts() const { return parts_; }
    [[nodiscard]] int size() const { return size_; }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
    [[nodiscard]] int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// m[i] = number of parts equal to i, for i = 0..size().
    [[nodiscard]] std::vector<int> multiplicities() const;

    [[nodiscard]] Partition conjugate() const;

    /// Partition with the largest part removed.
    [[nodiscard]] Partition tail() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Optional filters for partitions().
struct PartitionConstraints {
    std::optional<int> exact_length;
    std::optional<int> max_length;
    std::optional<int> max_part;
    bool no_repeated_odd = false;
    bool no_repeated_even = false;
};

/// All partitions of n satisfying the constraints, in reverse-lexicographic
/// order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions(int n, const PartitionConstraints& constraints = {});

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Lah number: partitions of an n-set into k nonempty ordered blocks.
BigInt lah(int n, int k);

/// Stirling number of the second kind.
BigInt stirling2(int n, int k);

BigInt bell(int n);

/// z_mu = prod_i i^{m_i} m_i!; n!/z_mu is the size of the conjugacy class.
BigInt centralizer_order(const Partition& mu);

/// Sign of any permutation of cycle type mu.
int cycle_type_sign(const Partition& mu);

/// Set partitions of a finite list of items, in restricted-growth-string
/// order. Each yielded value is a list of blocks; blocks are ordered by their
/// first item and items inside a block keep their input order.
class SetPartitions {
public:
    using Blocks = std::vector<std::vector<int>>;

    explicit SetPartitions(std::vector<int> items, std::optional<int> blocks = std::nullopt);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Blocks;
        using difference_type = std::ptrdiff_t;
        using pointer = const Blocks*;
        using reference = const Blocks&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        friend class SetPartitions;
        iterator(const SetPartitions* owner);
        bool advance_growth();
        bool accept() const;
        void materialize();

        const SetPartitions* owner_ = nullptr;
        std::vector<int> growth_;
        std::vector<int> prefix_max_;
        Blocks current_;
        bool done_ = true;
    };

    [[nodiscard]] iterator begin() const { return iterator(this); }
    [[nodiscard]] iterator end() const { return iterator(); }

private:
    std::vector<int> items_;
    std::optional<int> blocks_;
};

/// Collects SetPartitions into a vector.
std::vector<SetPartitions::Blocks> set_partitions(std::vector<int> items,
                                                  std::optional<int> blocks = std::nullopt);

/// Bijection on {0, ..., n-1}. String forms use 1-based labels.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n);

    /// images[i] is the image of i (0-based). Throws std::invalid_argument if
    /// the list is not a bijection.
    static Permutation from_images(std::vector<int> images);

    /// One-line notation with 1-based labels, e.g. {2, 3, 1, 5, 4}.
    static Permutation from_one_line(std::span<const int> one_based);

    /// Cycle notation "(1 2 3)(4 5)" or one-line "2,3,1,5,4", 1-based.
    /// For cycle notation the degree is max(n, largest label).
    static Permutation parse(std::string_view text, int n = 0);

    /// Canonical representative of a cycle type: cycles of consecutive
    /// integers, shortest cycles on the smallest labels.
    static Permutation canonical(const Partition& cycle_type);

    [[nodiscard]] int size() const { return static_cast<int>(images_.size()); }
    [[nodiscard]] int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] std::span<const int> images() const { return images_; }

    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_identity() const;

    /// Disjoint cycles with 0-based labels, each starting at its minimum,
    /// ordered by minimum. Fixed points appear as 1-cycles.
    [[nodiscard]] std::vector<std::vector<int>> cycles() const;
    [[nodiscard]] Partition cycle_type() const;

    [[nodiscard]] std::string to_cycle_string() const;
    [[nodiscard]] std::string to_one_line_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Cycles (1-based labels) and cycle type of a permutation.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
    Partition type;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Sign of the permutation that sorts `values` (distinct) into increasing order.
int sorting_sign(std::span<const int> values);

} // namespace braidchar
