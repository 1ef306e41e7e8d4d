#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidchar/combinatorics.hpp"

namespace braidchar {

/// Exact rational-valued function on the conjugacy classes of S_n, keyed by
/// cycle type. Always total: every partition of n has an entry.
class ClassFunction {
public:
    /// The zero class function on S_n.
    explicit ClassFunction(int n);

    /// Missing keys are filled with 0. Throws std::invalid_argument if a key
    /// is not a partition of n.
    ClassFunction(int n, const std::map<Partition, Rational>& values);

    /// The irreducible character chi^lambda.
    static ClassFunction irreducible(const Partition& lambda);

    /// Character of the regular representation: n! at the identity, 0 elsewhere.
    static ClassFunction regular(int n);

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] const Rational& operator()(const Partition& mu) const;
    void set(const Partition& mu, Rational value);
    [[nodiscard]] const std::map<Partition, Rational>& values() const { return values_; }

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction& operator*=(const Rational& scalar);

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    int n_;
    std::map<Partition, Rational> values_;
};

/// <f, g> = sum_mu f(mu) g(mu) / z_mu. Characters of S_n are real-valued so
/// no conjugation is needed.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Irreducible character table of S_n. Rows and columns both follow the
/// reverse-lexicographic order of partitions(n).
class CharacterTable {
public:
    explicit CharacterTable(int n);

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] const std::vector<Partition>& classes() const { return partitions_; }
    [[nodiscard]] std::size_t index(const Partition& p) const;
    [[nodiscard]] const BigInt& operator()(const Partition& lambda, const Partition& mu) const;
    [[nodiscard]] const BigInt& at(std::size_t lambda, std::size_t mu) const
    {
        return values_[lambda * partitions_.size() + mu];
    }
    [[nodiscard]] const BigInt& class_centralizer(std::size_t mu) const { return centralizers_[mu]; }

private:
    int n_;
    std::vector<Partition> partitions_;
    std::map<Partition, std::size_t> index_;
    std::vector<BigInt> values_;
    std::vector<BigInt> centralizers_;
};

/// Session-wide memoized table for S_n. Concurrent readers never block each
/// other; the first request for a given n builds and publishes the table.
std::shared_ptr<const CharacterTable> character_table(int n);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule, computed directly without
/// the table cache.
BigInt murnaghan_nakayama(const Partition& lambda, const Partition& mu);

/// chi^lambda(mu), served from the cached table.
BigInt irreducible_character(const Partition& lambda, const Partition& mu);

/// Dimension of the irreducible indexed by lambda.
BigInt irreducible_dimension(const Partition& lambda);

/// Multiplicities m_lambda with f = sum m_lambda chi^lambda. Only nonzero
/// entries are present. Non-integral or negative values are returned as-is;
/// they signal that f is not a genuine character.
std::map<Partition, Rational> decompose(const ClassFunction& f);

Rational multiplicity_trivial(const ClassFunction& f);
Rational multiplicity_alternating(const ClassFunction& f);

/// Irreducible of S_n in both the partition and the Church-Farb coordinates.
/// The Church-Farb tail (n_1 >= ... >= n_r) drops the largest row.
struct IrreducibleLabel {
    Partition lambda_bar;
    std::optional<std::vector<int>> cf_form;

    [[nodiscard]] int n() const { return lambda_bar.size(); }
    /// n - lambda_0, the number of boxes below the first row.
    [[nodiscard]] int weight() const { return n() - lambda_bar.largest(); }
    /// "V(0)", "V(2)", "V(1,1)".
    [[nodiscard]] std::string cf_string() const;
};

IrreducibleLabel church_farb_label(const Partition& lambda);

/// Inverse of church_farb_label: the partition (n - sum tail, tail...).
/// Returns std::nullopt when V(tail)_n is undefined, i.e. when
/// n < 2 n_1 + n_2 + ... + n_r. Zero entries of the tail are ignored.
std::optional<Partition> from_church_farb(int n, std::span<const int> tail);

/// "V(2,1)" -> {2,1}; "V(0)" -> {}.
std::vector<int> parse_church_farb(std::string_view text);
std::string church_farb_string(std::span<const int> tail);

} // namespace braidchar
