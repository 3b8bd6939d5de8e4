#include "frobalg/algebra.hpp"

#include "frobalg/errors.hpp"

#include <sstream>

namespace frobalg {

AlgebraElement::AlgebraElement(ParamsPtr params) : params_(std::move(params))
{
    if (!params_) throw InvalidArgument("AlgebraElement requires construction parameters");
}

AlgebraElement::AlgebraElement(ParamsPtr params, const BasisElement& b, FieldElement c) : AlgebraElement(std::move(params))
{
    add_term(b, c);
}

AlgebraElement::AlgebraElement(ParamsPtr params, const BasisElement& b) : AlgebraElement(std::move(params))
{
    add_term(b, field().one());
}

FieldElement AlgebraElement::coefficient(const BasisElement& b) const
{
    auto it = terms_.find(b);
    return it == terms_.end() ? field().zero() : it->second;
}

void AlgebraElement::add_term(const BasisElement& b, FieldElement c)
{
    if (c == field().zero()) return;
    if (!valid_for(b, params_->p)) throw InvalidArgument(b.to_string() + " is not a basis element for this p");
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (inserted) return;
    it->second = field().add(it->second, c);
    if (it->second == field().zero()) terms_.erase(it);
}

void AlgebraElement::check_compatible(const AlgebraElement& y) const
{
    if (params_ == y.params_) return;
    if (params_->p != y.params_->p || !(params_->K() == y.params_->K()) || params_->omega != y.params_->omega ||
        params_->r != y.params_->r)
        throw InvalidArgument("elements built over different construction parameters");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& y) const
{
    check_compatible(y);
    AlgebraElement out = *this;
    for (const auto& [b, c] : y.terms_) out.add_term(b, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& y) const
{
    check_compatible(y);
    AlgebraElement out = *this;
    for (const auto& [b, c] : y.terms_) out.add_term(b, field().neg(c));
    return out;
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement out(params_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, field().neg(c));
    return out;
}

AlgebraElement AlgebraElement::scaled(FieldElement c) const
{
    AlgebraElement out(params_);
    if (c == field().zero()) return out;
    for (const auto& [b, x] : terms_) out.terms_.emplace(b, field().mul(c, x));
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& y) const
{
    check_compatible(y);
    return terms_ == y.terms_;
}

std::string AlgebraElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        const std::string coeff = field().to_string(c);
        if (coeff.find('+') != std::string::npos)
            out << '(' << coeff << ')';
        else
            out << coeff;
        out << '*' << b.to_string();
    }
    return out.str();
}

bool bracket_monomials(const BasisElement& x, const BasisElement& y, BasisElement& out, int& sign)
{
    if (x.is_a() == y.is_a()) return false;
    if (y.is_a()) {
        out = x.with_a(y.head());
        sign = 1;
    } else {
        out = y.with_a(x.head());
        sign = -1;
    }
    return true;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y)
{
    x.check_compatible(y);
    AlgebraElement out(x.params());
    const Field& K = x.field();
    BasisElement m = BasisElement::a(1);
    int sign = 0;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            if (!bracket_monomials(bx, by, m, sign)) continue;
            const FieldElement c = K.mul(cx, cy);
            out.add_term(m, sign > 0 ? c : K.neg(c));
        }
    }
    return out;
}

AlgebraElement homogeneous_component(const AlgebraElement& x, unsigned k)
{
    AlgebraElement out(x.params());
    for (const auto& [b, c] : x.terms())
        if (b.degree() == k) out.add_term(b, c);
    return out;
}

AlgebraElement gen_a(const ParamsPtr& params, unsigned i) { return AlgebraElement(params, BasisElement::a(i)); }

AlgebraElement gen_v(const ParamsPtr& params, unsigned i) { return AlgebraElement(params, BasisElement::v(i)); }

} // namespace frobalg
