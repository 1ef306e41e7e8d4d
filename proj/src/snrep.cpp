#include "braidchar/snrep.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace braidchar {

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(int n)
    : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("class function on S_n with negative n");
    for (auto& mu : partitions(n))
        values_.emplace(std::move(mu), Rational(0));
}

ClassFunction::ClassFunction(int n, const std::map<Partition, Rational>& values)
    : ClassFunction(n)
{
    for (const auto& [mu, v] : values) {
        if (mu.size() != n)
            throw std::invalid_argument("class function key " + mu.to_string() + " is not a partition of " + std::to_string(n));
        values_[mu] = v;
    }
}

ClassFunction ClassFunction::irreducible(const Partition& lambda)
{
    auto table = character_table(lambda.size());
    ClassFunction f(lambda.size());
    auto row = table->index(lambda);
    for (std::size_t j = 0; j < table->classes().size(); ++j)
        f.values_[table->classes()[j]] = Rational(table->at(row, j));
    return f;
}

ClassFunction ClassFunction::regular(int n)
{
    ClassFunction f(n);
    f.values_[Partition::ones(n)] = Rational(factorial(n));
    return f;
}

const Rational& ClassFunction::operator()(const Partition& mu) const
{
    auto it = values_.find(mu);
    if (it == values_.end())
        throw std::invalid_argument("class function evaluated at " + mu.to_string() + ", not a cycle type of S_" + std::to_string(n_));
    return it->second;
}

void ClassFunction::set(const Partition& mu, Rational value)
{
    if (mu.size() != n_)
        throw std::invalid_argument("class function key has wrong size");
    values_[mu] = std::move(value);
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other)
{
    if (other.n_ != n_)
        throw std::invalid_argument("adding class functions of different degree");
    for (const auto& [mu, v] : other.values_)
        values_[mu] += v;
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scalar)
{
    for (auto& [mu, v] : values_)
        v *= scalar;
    return *this;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g)
{
    if (f.degree() != g.degree())
        throw std::invalid_argument("inner product of class functions of different degree");
    Rational total = 0;
    for (const auto& [mu, v] : f.values()) {
        if (v == 0)
            continue;
        total += v * g(mu) / Rational(centralizer_order(mu));
    }
    return total;
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

// Beta-set (first-column hook lengths) of lambda padded to `length` rows,
// stored in decreasing order.
std::vector<int> beta_set(const Partition& lambda, int length)
{
    std::vector<int> beta(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        int part = i < lambda.length() ? lambda[static_cast<std::size_t>(i)] : 0;
        beta[static_cast<std::size_t>(i)] = part + length - 1 - i;
    }
    return beta;
}

class RimHookEvaluator {
public:
    explicit RimHookEvaluator(const Partition& mu)
        : parts_(mu.parts().begin(), mu.parts().end())
    {
    }

    // Removing a rim hook of length r moves one bead from position b to the
    // free position b - r; the sign counts the beads jumped over.
    BigInt evaluate(std::vector<int>& beta, std::size_t depth)
    {
        if (depth == parts_.size())
            return 1;
        auto key = std::make_pair(beta, depth);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        int r = parts_[depth];
        BigInt total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            int from = beta[i];
            int to = from - r;
            if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end())
                continue;
            int jumped = 0;
            for (int b : beta)
                if (b > to && b < from)
                    ++jumped;
            std::vector<int> next = beta;
            next[i] = to;
            std::sort(next.begin(), next.end(), std::greater<>());
            BigInt sub = evaluate(next, depth + 1);
            if (jumped % 2)
                total -= sub;
            else
                total += sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::vector<int> parts_;
    std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo_;
};

} // namespace

BigInt murnaghan_nakayama(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("irreducible_character: lambda and mu partition different n");
    RimHookEvaluator eval(mu);
    auto beta = beta_set(lambda, lambda.size());
    return eval.evaluate(beta, 0);
}

CharacterTable::CharacterTable(int n)
    : n_(n)
    , partitions_(partitions(n))
{
    const auto count = partitions_.size();
    for (std::size_t i = 0; i < count; ++i) {
        index_.emplace(partitions_[i], i);
        centralizers_.push_back(centralizer_order(partitions_[i]));
    }
    values_.resize(count * count);
    for (std::size_t j = 0; j < count; ++j) {
        // One evaluator per column shares intermediate shapes across rows.
        RimHookEvaluator eval(partitions_[j]);
        for (std::size_t i = 0; i < count; ++i) {
            auto beta = beta_set(partitions_[i], n);
            values_[i * count + j] = eval.evaluate(beta, 0);
        }
    }
}

std::size_t CharacterTable::index(const Partition& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::invalid_argument(p.to_string() + " is not a partition of " + std::to_string(n_));
    return it->second;
}

const BigInt& CharacterTable::operator()(const Partition& lambda, const Partition& mu) const
{
    return at(index(lambda), index(mu));
}

std::shared_ptr<const CharacterTable> character_table(int n)
{
    static std::shared_mutex mutex;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    std::unique_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end())
        return it->second;
    auto table = std::make_shared<const CharacterTable>(n);
    cache.emplace(n, table);
    return table;
}

BigInt irreducible_character(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("irreducible_character: lambda and mu partition different n");
    return (*character_table(lambda.size()))(lambda, mu);
}

BigInt irreducible_dimension(const Partition& lambda)
{
    return irreducible_character(lambda, Partition::ones(lambda.size()));
}

std::map<Partition, Rational> decompose(const ClassFunction& f)
{
    auto table = character_table(f.degree());
    const auto& classes = table->classes();
    std::vector<Rational> weighted(classes.size());
    for (std::size_t j = 0; j < classes.size(); ++j)
        weighted[j] = f(classes[j]) / Rational(table->class_centralizer(j));

    std::map<Partition, Rational> out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        Rational m = 0;
        for (std::size_t j = 0; j < classes.size(); ++j)
            if (weighted[j] != 0)
                m += weighted[j] * Rational(table->at(i, j));
        if (m != 0)
            out.emplace(classes[i], m);
    }
    return out;
}

Rational multiplicity_trivial(const ClassFunction& f)
{
    Rational total = 0;
    for (const auto& [mu, v] : f.values())
        total += v / Rational(centralizer_order(mu));
    return total;
}

Rational multiplicity_alternating(const ClassFunction& f)
{
    Rational total = 0;
    for (const auto& [mu, v] : f.values())
        total += cycle_type_sign(mu) * v / Rational(centralizer_order(mu));
    return total;
}

// ---------------------------------------------------------------------------
// Church-Farb labels

std::string church_farb_string(std::span<const int> tail)
{
    std::string out = "V(";
    bool first = true;
    for (int v : tail) {
        if (v == 0)
            continue;
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    if (first)
        out += '0';
    out += ')';
    return out;
}

std::string IrreducibleLabel::cf_string() const
{
    if (!cf_form)
        return "V(?)";
    return church_farb_string(*cf_form);
}

IrreducibleLabel church_farb_label(const Partition& lambda)
{
    IrreducibleLabel label{lambda, std::nullopt};
    auto tail = lambda.tail();
    // lambda_0 >= lambda_1 is exactly the bound n >= 2 n_1 + n_2 + ..., so
    // the tail form always exists in the forward direction.
    label.cf_form = std::vector<int>(tail.parts().begin(), tail.parts().end());
    return label;
}

std::optional<Partition> from_church_farb(int n, std::span<const int> tail)
{
    std::vector<int> parts;
    int sum = 0;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (tail[i] < 0)
            throw std::invalid_argument("Church-Farb tail entries must be non-negative");
        if (i && tail[i] > tail[i - 1])
            throw std::invalid_argument("Church-Farb tail must be weakly decreasing");
        if (tail[i] > 0)
            parts.push_back(tail[i]);
        sum += tail[i];
    }
    int first = n - sum;
    if (first < (parts.empty() ? 0 : parts.front()))
        return std::nullopt;
    if (first > 0)
        parts.insert(parts.begin(), first);
    return Partition(std::move(parts));
}

std::vector<int> parse_church_farb(std::string_view text)
{
    if (text.size() < 3 || text.substr(0, 2) != "V(" || text.back() != ')')
        throw std::invalid_argument("malformed Church-Farb label: " + std::string(text));
    auto body = text.substr(2, text.size() - 3);
    if (body == "0")
        return {};
    auto p = Partition::parse(body);
    return {p.parts().begin(), p.parts().end()};
}

} // namespace braidchar
