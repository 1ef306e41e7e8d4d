#include "braidchar/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "braidchar/parallel.hpp"

namespace braidchar::oracle {

int BasisElement::degree() const
{
    int d = 0;
    for (const auto& chain : blocks)
        d += static_cast<int>(chain.size()) - 1;
    return d;
}

std::string BasisElement::to_string(Algebra algebra) const
{
    const char sep = algebra == Algebra::PfbDual ? '<' : ',';
    std::string out;
    for (const auto& chain : blocks) {
        out += '(';
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i)
                out += sep;
            out += std::to_string(chain[i] + 1);
        }
        out += ')';
    }
    return out;
}

namespace {

void check_range(int n, int degree)
{
    if (n < 1 || degree < 0 || degree > n - 1)
        throw std::out_of_range("basis: requires n >= 1 and 0 <= degree <= n-1 (n=" + std::to_string(n) + ", degree=" + std::to_string(degree) + ")");
}

bool root_less(const std::vector<int>& a, const std::vector<int>& b)
{
    return a.front() < b.front();
}

// Every orientation of every block, chains sorted by root afterwards.
void visit_orientations(std::vector<std::vector<int>>& chains, std::size_t at,
                        const std::function<void(const BasisElement&)>& visit)
{
    if (at == chains.size()) {
        BasisElement b{chains};
        std::sort(b.blocks.begin(), b.blocks.end(), root_less);
        visit(b);
        return;
    }
    auto& chain = chains[at];
    std::sort(chain.begin(), chain.end());
    do {
        visit_orientations(chains, at + 1, visit);
    } while (std::next_permutation(chain.begin(), chain.end()));
}

} // namespace

void for_each_basis_element(Algebra algebra, int n, int degree,
                            const std::function<void(const BasisElement&)>& visit)
{
    check_range(n, degree);
    std::vector<int> items(static_cast<std::size_t>(n));
    std::iota(items.begin(), items.end(), 0);
    for (const auto& blocks : SetPartitions(items, n - degree)) {
        std::vector<std::vector<int>> chains;
        for (const auto& block : blocks)
            if (block.size() >= 2)
                chains.push_back(block);
        if (algebra == Algebra::PfbDual)
            visit(BasisElement{std::move(chains)});
        else
            visit_orientations(chains, 0, visit);
    }
}

std::vector<BasisElement> basis(Algebra algebra, int n, int degree)
{
    std::vector<BasisElement> out;
    for_each_basis_element(algebra, n, degree, [&](const BasisElement& b) { out.push_back(b); });
    return out;
}

BasisIndex::BasisIndex(Algebra algebra, int n, int degree)
    : elements_(basis(algebra, n, degree))
{
    for (std::size_t i = 0; i < elements_.size(); ++i)
        lookup_.emplace(elements_[i], i);
}

std::size_t BasisIndex::index_of(const BasisElement& b) const
{
    auto it = lookup_.find(b);
    if (it == lookup_.end())
        throw std::invalid_argument("not a basis element in normal form");
    return it->second;
}

std::shared_ptr<const BasisIndex> basis_index(Algebra algebra, int n, int degree)
{
    using Key = std::tuple<int, int, int>;
    static std::shared_mutex mutex;
    static std::map<Key, std::shared_ptr<const BasisIndex>> cache;
    Key key{static_cast<int>(algebra), n, degree};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto built = std::make_shared<const BasisIndex>(algebra, n, degree);
    std::unique_lock lock(mutex);
    return cache.emplace(key, std::move(built)).first->second;
}

SignedElement act(Algebra algebra, const Permutation& sigma, const BasisElement& b)
{
    SignedElement out{b, 1};
    auto& chains = out.element.blocks;
    for (auto& chain : chains) {
        for (int& v : chain) {
            if (v < 0 || v >= sigma.size())
                throw std::invalid_argument("basis element vertex outside the permutation's domain");
            v = sigma(v);
        }
        if (algebra == Algebra::PfbDual) {
            out.sign *= sorting_sign(chain);
            std::sort(chain.begin(), chain.end());
        }
    }

    // Koszul sign of the reordering: every pair of factors whose relative
    // order flips contributes (-1)^{d_i d_j}.
    for (std::size_t i = 0; i < chains.size(); ++i)
        for (std::size_t j = i + 1; j < chains.size(); ++j)
            if (chains[i].front() > chains[j].front()) {
                auto di = chains[i].size() - 1;
                auto dj = chains[j].size() - 1;
                if ((di * dj) % 2)
                    out.sign = -out.sign;
            }
    std::sort(chains.begin(), chains.end(), root_less);
    return out;
}

SignedIndex act(Algebra algebra, const Permutation& sigma, int degree, std::size_t index)
{
    auto idx = basis_index(algebra, sigma.size(), degree);
    auto image = act(algebra, sigma, idx->elements().at(index));
    return {idx->index_of(image.element), image.sign};
}

GradedCharacter graded_character(Algebra algebra, const Permutation& sigma)
{
    const int n = sigma.size();
    if (n < 1)
        throw std::invalid_argument("graded_character: n must be positive");
    GradedCharacter ch{n, sigma.cycle_type(), std::vector<BigInt>(static_cast<std::size_t>(n), 0)};
    for (int degree = 0; degree < n; ++degree) {
        long long trace = 0;
        for_each_basis_element(algebra, n, degree, [&](const BasisElement& b) {
            auto image = act(algebra, sigma, b);
            if (image.element == b)
                trace += image.sign;
        });
        ch.coeffs[static_cast<std::size_t>(degree)] = BigInt(static_cast<long>(trace));
    }
    return ch;
}

GradedCharacter graded_character(Algebra algebra, int n, const Partition& mu)
{
    if (mu.size() != n)
        throw std::invalid_argument("graded_character: mu must partition n");
    auto ch = graded_character(algebra, Permutation::canonical(mu));
    ch.mu = mu;
    return ch;
}

std::map<Partition, GradedCharacter> all_characters(Algebra algebra, int n)
{
    auto classes = partitions(n);
    std::vector<GradedCharacter> results(classes.size());
    parallel_for(classes.size(), [&](std::size_t i) { results[i] = graded_character(algebra, n, classes[i]); });
    std::map<Partition, GradedCharacter> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        out.emplace(classes[i], std::move(results[i]));
    return out;
}

ClassFunction degree_character(const std::map<Partition, GradedCharacter>& characters, int n, int degree)
{
    ClassFunction f(n);
    for (const auto& [mu, ch] : characters) {
        const auto k = static_cast<std::size_t>(degree);
        f.set(mu, Rational(k < ch.coeffs.size() ? ch.coeffs[k] : BigInt(0)));
    }
    return f;
}

ClassFunction degree_character(Algebra algebra, int n, int degree)
{
    check_range(n, degree);
    return degree_character(all_characters(algebra, n), n, degree);
}

std::vector<BigInt> hilbert_series(Algebra algebra, int n)
{
    std::vector<BigInt> out;
    for (int degree = 0; degree < n; ++degree) {
        long long count = 0;
        for_each_basis_element(algebra, n, degree, [&](const BasisElement&) { ++count; });
        out.emplace_back(static_cast<long>(count));
    }
    return out;
}

std::map<Partition, Rational> top_degree_report(Algebra algebra, int n)
{
    if (n < 2)
        throw std::out_of_range("top_degree_report: requires n >= 2");
    return decompose(degree_character(algebra, n, n - 1));
}

} // namespace braidchar::oracle
