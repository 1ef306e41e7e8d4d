#include "braidchar/symfunc.hpp"

#include <stdexcept>

namespace braidchar {

namespace {

Partition merge(const Partition& a, const Partition& b)
{
    std::vector<int> parts(a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(parts));
}

} // namespace

SymFunc::SymFunc(int degree)
    : degree_(degree)
{
    if (degree < 0)
        throw std::invalid_argument("symmetric function of negative degree");
}

SymFunc::SymFunc(int degree, const std::map<Partition, Rational>& power_sum_coeffs)
    : SymFunc(degree)
{
    for (const auto& [mu, c] : power_sum_coeffs) {
        if (mu.size() != degree)
            throw std::invalid_argument("p_" + mu.to_string() + " is not homogeneous of degree " + std::to_string(degree));
        add_term(mu, c);
    }
}

void SymFunc::add_term(const Partition& mu, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

SymFunc SymFunc::power_sum(const Partition& mu)
{
    SymFunc f(mu.size());
    f.coeffs_.emplace(mu, Rational(1));
    return f;
}

SymFunc SymFunc::schur(const Partition& lambda)
{
    // s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu
    auto table = character_table(lambda.size());
    auto row = table->index(lambda);
    SymFunc f(lambda.size());
    for (std::size_t j = 0; j < table->classes().size(); ++j) {
        const auto& chi = table->at(row, j);
        if (chi != 0)
            f.add_term(table->classes()[j], Rational(chi) / Rational(table->class_centralizer(j)));
    }
    return f;
}

SymFunc SymFunc::elementary(int p)
{
    if (p < 0)
        throw std::invalid_argument("e_p with negative p");
    return schur(Partition::ones(p));
}

SymFunc SymFunc::homogeneous(int p)
{
    if (p < 0)
        throw std::invalid_argument("h_p with negative p");
    return p == 0 ? one() : schur(Partition{p});
}

SymFunc SymFunc::frobenius(const ClassFunction& f)
{
    SymFunc out(f.degree());
    for (const auto& [mu, v] : f.values())
        out.add_term(mu, v / Rational(centralizer_order(mu)));
    return out;
}

Rational SymFunc::coefficient(const Partition& mu) const
{
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

ClassFunction SymFunc::to_class_function() const
{
    ClassFunction f(degree_);
    for (const auto& [mu, c] : coeffs_)
        f.set(mu, c * Rational(centralizer_order(mu)));
    return f;
}

SymFunc& SymFunc::operator+=(const SymFunc& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        degree_ = other.degree_;
    else if (degree_ != other.degree_)
        throw std::invalid_argument("adding symmetric functions of different degree");
    for (const auto& [mu, c] : other.coeffs_)
        add_term(mu, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other)
{
    SymFunc negated = other;
    negated *= Rational(-1);
    return *this += negated;
}

SymFunc& SymFunc::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [mu, c] : coeffs_)
        c *= scalar;
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b)
{
    SymFunc out(a.degree_ + b.degree_);
    for (const auto& [mu, c] : a.coeffs_)
        for (const auto& [nu, d] : b.coeffs_)
            out.add_term(merge(mu, nu), c * d);
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g)
{
    return f * g;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g)
{
    if (g.is_zero())
        throw std::invalid_argument("plethysm with zero inner function");

    std::map<int, SymFunc> power_images; // m -> p_m[g]
    auto image = [&](int m) -> const SymFunc& {
        auto it = power_images.find(m);
        if (it != power_images.end())
            return it->second;
        std::map<Partition, Rational> scaled;
        for (const auto& [nu, c] : g.power_sum_coeffs()) {
            std::vector<int> parts(nu.parts().begin(), nu.parts().end());
            for (int& part : parts)
                part *= m;
            scaled.emplace(Partition(std::move(parts)), c);
        }
        return power_images.emplace(m, SymFunc(m * g.degree(), scaled)).first->second;
    };

    SymFunc out(f.degree() * g.degree());
    for (const auto& [mu, c] : f.power_sum_coeffs()) {
        SymFunc term = SymFunc::one();
        for (int part : mu.parts())
            term = term * image(part);
        out += term * c;
    }
    return out;
}

SymFunc ch_regular(int m)
{
    if (m < 1)
        throw std::invalid_argument("ch_regular: m must be positive");
    return SymFunc::power_sum(Partition::ones(m));
}

std::map<Partition, Rational> to_schur(const SymFunc& f)
{
    // p_mu = sum_lambda chi^lambda(mu) s_lambda
    auto table = character_table(f.degree());
    std::map<Partition, Rational> out;
    for (std::size_t i = 0; i < table->classes().size(); ++i) {
        Rational total = 0;
        for (const auto& [mu, c] : f.power_sum_coeffs())
            total += c * Rational(table->at(i, table->index(mu)));
        if (total != 0)
            out.emplace(table->classes()[i], total);
    }
    return out;
}

} // namespace braidchar
