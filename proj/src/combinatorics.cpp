#include "braidchar/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace braidchar {

namespace {

int parse_int(std::string_view token)
{
    while (!token.empty() && token.front() == ' ')
        token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ')
        token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
    return value;
}

std::vector<int> parse_int_list(std::string_view text, char sep)
{
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto stop = text.find(sep, start);
        if (stop == std::string_view::npos)
            stop = text.size();
        out.push_back(parse_int(text.substr(start, stop - start)));
        start = stop + 1;
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p <= 0)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        return Partition();
    auto parts = parse_int_list(text, ',');
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be weakly decreasing: " + std::string(text));
    return Partition(std::move(parts));
}

Partition Partition::ones(int n)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1));
}

Partition Partition::from_frobenius(std::span<const int> arms, std::span<const int> legs)
{
    if (arms.size() != legs.size())
        throw std::invalid_argument("Frobenius coordinates: arm and leg lists differ in length");
    const auto r = static_cast<int>(arms.size());
    for (int i = 0; i < r; ++i) {
        if (arms[i] < 0 || legs[i] < 0)
            throw std::invalid_argument("Frobenius coordinates must be non-negative");
        if (i > 0 && (arms[i] >= arms[i - 1] || legs[i] >= legs[i - 1]))
            throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
    }
    // Row i <= r has a_i + i boxes; column i <= r has b_i + i boxes, and the
    // rows below the diagonal block only meet those columns.
    std::vector<int> rows;
    for (int i = 0; i < r; ++i)
        rows.push_back(arms[i] + i + 1);
    const int depth = r == 0 ? 0 : legs[0] + 1;
    for (int j = r + 1; j <= depth; ++j) {
        int len = 0;
        for (int i = 0; i < r; ++i)
            if (legs[i] + i + 1 >= j)
                ++len;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

std::vector<int> Partition::multiplicities() const
{
    std::vector<int> m(static_cast<std::size_t>(size_) + 1, 0);
    for (int p : parts_)
        ++m[static_cast<std::size_t>(p)];
    return m;
}

Partition Partition::conjugate() const
{
    std::vector<int> out;
    for (int col = 1; col <= largest(); ++col) {
        int height = 0;
        for (int p : parts_)
            if (p >= col)
                ++height;
        out.push_back(height);
    }
    return Partition(std::move(out));
}

Partition Partition::tail() const
{
    if (parts_.empty())
        return Partition();
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Partition enumeration

std::vector<Partition> partitions(int n, const PartitionConstraints& c)
{
    if (n < 0)
        throw std::invalid_argument("partitions: n must be non-negative");
    for (const auto& v : {c.exact_length, c.max_length, c.max_part})
        if (v && *v < 0)
            throw std::invalid_argument("partitions: constraint values must be non-negative");

    int length_cap = n;
    if (c.max_length)
        length_cap = std::min(length_cap, *c.max_length);
    if (c.exact_length)
        length_cap = std::min(length_cap, *c.exact_length);

    std::vector<Partition> out;
    std::vector<int> current;

    // Parts are chosen largest first, each no larger than the previous one.
    std::function<void(int, int)> extend = [&](int remaining, int cap) {
        if (remaining == 0) {
            if (!c.exact_length || static_cast<int>(current.size()) == *c.exact_length)
                out.emplace_back(current);
            return;
        }
        int slots = length_cap - static_cast<int>(current.size());
        if (slots <= 0)
            return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            // Even with every remaining slot at size p we cannot finish.
            if (static_cast<long long>(p) * slots < remaining)
                break;
            if (!current.empty() && current.back() == p) {
                if (c.no_repeated_odd && p % 2 == 1)
                    continue;
                if (c.no_repeated_even && p % 2 == 0)
                    continue;
            }
            current.push_back(p);
            extend(remaining - p, p);
            current.pop_back();
        }
    };

    int first_cap = c.max_part ? std::min(n, *c.max_part) : n;
    extend(n, first_cap);
    return out;
}

// ---------------------------------------------------------------------------
// Counting

BigInt factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt lah(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("lah: requires 0 <= k <= n");
    if (k == 0)
        return n == 0 ? 1 : 0;
    BigInt r = binomial(n - 1, k - 1) * factorial(n);
    r /= factorial(k);
    return r;
}

BigInt stirling2(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("stirling2: requires 0 <= k <= n");
    // Row-by-row recurrence S(i, j) = S(i-1, j-1) + j S(i-1, j).
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] + j * row[static_cast<std::size_t>(j)];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

BigInt bell(int n)
{
    BigInt total = 0;
    for (int k = 0; k <= n; ++k)
        total += stirling2(n, k);
    return total;
}

BigInt centralizer_order(const Partition& mu)
{
    auto m = mu.multiplicities();
    BigInt z = 1;
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m[i]));
        z *= power * factorial(m[i]);
    }
    return z;
}

int cycle_type_sign(const Partition& mu)
{
    int even_cycles = 0;
    for (int p : mu.parts())
        if (p % 2 == 0)
            ++even_cycles;
    return even_cycles % 2 ? -1 : 1;
}

// ---------------------------------------------------------------------------
// Set partitions

SetPartitions::SetPartitions(std::vector<int> items, std::optional<int> blocks)
    : items_(std::move(items))
    , blocks_(blocks)
{
}

SetPartitions::iterator::iterator(const SetPartitions* owner)
    : owner_(owner)
    , growth_(owner->items_.size(), 0)
    , prefix_max_(owner->items_.size(), 0)
    , done_(false)
{
    if (owner_->blocks_ && (*owner_->blocks_ < 0 || *owner_->blocks_ > static_cast<int>(growth_.size()))) {
        done_ = true;
        return;
    }
    if (owner_->blocks_ && !growth_.empty()) {
        // First restricted growth string with the requested number of blocks:
        // 0,...,0,1,2,...,b-1.
        int b = *owner_->blocks_;
        if (b == 0) {
            done_ = true;
            return;
        }
        std::size_t offset = growth_.size() - static_cast<std::size_t>(b);
        for (std::size_t i = 0; i < growth_.size(); ++i)
            growth_[i] = i <= offset ? 0 : static_cast<int>(i - offset);
        for (std::size_t i = 0; i < growth_.size(); ++i)
            prefix_max_[i] = std::max(i ? prefix_max_[i - 1] : 0, growth_[i]);
    }
    if (!accept())
        ++*this;
    else
        materialize();
}

bool SetPartitions::iterator::accept() const
{
    if (!owner_->blocks_)
        return true;
    int count = growth_.empty() ? 0 : prefix_max_.back() + 1;
    return count == *owner_->blocks_;
}

bool SetPartitions::iterator::advance_growth()
{
    for (std::size_t i = growth_.size(); i-- > 1;) {
        if (growth_[i] <= prefix_max_[i - 1]) {
            ++growth_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], growth_[i]);
            for (std::size_t j = i + 1; j < growth_.size(); ++j) {
                growth_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return true;
        }
    }
    return false;
}

SetPartitions::iterator& SetPartitions::iterator::operator++()
{
    while (true) {
        if (!advance_growth()) {
            done_ = true;
            current_.clear();
            return *this;
        }
        if (accept())
            break;
    }
    materialize();
    return *this;
}

void SetPartitions::iterator::materialize()
{
    int count = growth_.empty() ? 0 : prefix_max_.back() + 1;
    current_.assign(static_cast<std::size_t>(count), {});
    for (std::size_t i = 0; i < growth_.size(); ++i)
        current_[static_cast<std::size_t>(growth_[i])].push_back(owner_->items_[i]);
}

std::vector<SetPartitions::Blocks> set_partitions(std::vector<int> items, std::optional<int> blocks)
{
    SetPartitions range(std::move(items), blocks);
    return {range.begin(), range.end()};
}

// ---------------------------------------------------------------------------
// Permutations

Permutation Permutation::identity(int n)
{
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(n));
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images)
{
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation images must form a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_one_line(std::span<const int> one_based)
{
    std::vector<int> images;
    images.reserve(one_based.size());
    for (int v : one_based)
        images.push_back(v - 1);
    return from_images(std::move(images));
}

Permutation Permutation::parse(std::string_view text, int n)
{
    text = trim(text);
    if (text.find('(') == std::string_view::npos) {
        if (text.empty())
            return identity(n);
        auto p = from_one_line(parse_int_list(text, ','));
        if (n && p.size() != n)
            throw std::invalid_argument("one-line permutation has wrong degree");
        return p;
    }

    std::vector<std::vector<int>> cycles;
    int largest = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text[pos] != '(')
            throw std::invalid_argument("malformed cycle notation: " + std::string(text));
        auto close = text.find(')', pos);
        if (close == std::string_view::npos)
            throw std::invalid_argument("unbalanced cycle notation: " + std::string(text));
        auto body = trim(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cycle;
        std::size_t i = 0;
        while (i < body.size()) {
            while (i < body.size() && (body[i] == ' ' || body[i] == ','))
                ++i;
            std::size_t j = i;
            while (j < body.size() && body[j] != ' ' && body[j] != ',')
                ++j;
            if (j > i) {
                int label = parse_int(body.substr(i, j - i));
                if (label < 1)
                    throw std::invalid_argument("cycle labels are 1-based");
                cycle.push_back(label);
                largest = std::max(largest, label);
            }
            i = j;
        }
        cycles.push_back(std::move(cycle));
        pos = close + 1;
    }

    if (n && largest > n)
        throw std::invalid_argument("cycle label exceeds permutation degree");
    std::vector<int> images(static_cast<std::size_t>(std::max(n, largest)));
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> used(images.size(), 0);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            auto from = static_cast<std::size_t>(cycle[i] - 1);
            if (used[from])
                throw std::invalid_argument("cycles are not disjoint");
            used[from] = 1;
            images[from] = cycle[(i + 1) % cycle.size()] - 1;
        }
    }
    return from_images(std::move(images));
}

Permutation Permutation::canonical(const Partition& cycle_type)
{
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(cycle_type.size()));
    int base = 0;
    for (int i = cycle_type.length() - 1; i >= 0; --i) {
        int len = cycle_type[static_cast<std::size_t>(i)];
        for (int j = 0; j < len; ++j)
            images.push_back(base + (j + 1) % len);
        base += len;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("composing permutations of different degree");
    Permutation r;
    r.images_.resize(b.images_.size());
    for (std::size_t i = 0; i < b.images_.size(); ++i)
        r.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    return r;
}

Permutation Permutation::inverse() const
{
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        r.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return r;
}

int Permutation::sign() const
{
    return cycle_type_sign(cycle_type());
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i))
            return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start])
            continue;
        std::vector<int> cycle;
        auto i = start;
        while (!seen[i]) {
            seen[i] = 1;
            cycle.push_back(static_cast<int>(i));
            i = static_cast<std::size_t>(images_[i]);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

Partition Permutation::cycle_type() const
{
    std::vector<int> lengths;
    for (const auto& c : cycles())
        lengths.push_back(static_cast<int>(c.size()));
    return Partition(std::move(lengths));
}

std::string Permutation::to_cycle_string() const
{
    std::string out;
    for (const auto& c : cycles()) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(c[i] + 1);
        }
        out += ')';
    }
    return out;
}

std::string Permutation::to_one_line_string() const
{
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(images_[i] + 1);
    }
    return out;
}

CycleDecomposition cycle_decomposition(const Permutation& p)
{
    CycleDecomposition d;
    d.cycles = p.cycles();
    for (auto& c : d.cycles)
        for (int& v : c)
            ++v;
    d.type = p.cycle_type();
    return d;
}

int sorting_sign(std::span<const int> values)
{
    int inversions = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] > values[j])
                ++inversions;
    return inversions % 2 ? -1 : 1;
}

} // namespace braidchar
