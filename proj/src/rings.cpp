#include "framelab/rings.hpp"

#include <cctype>
#include <sstream>

namespace framelab {

namespace {

void require_same(const RingElem &x, const RingElem &y) {
    if (!(x.ring() == y.ring()))
        throw DomainError("mixed rings: " + x.ring().name() + " and " + y.ring().name());
}

// floor(x / d) rounded to the nearest integer, ties towards +infinity.
Integer round_div(const Integer &x, const Integer &d) {
    Integer num = 2 * x + d;
    Integer den = 2 * d;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Complex conjugate (Gaussian / Eisenstein).
RingElem conjugate(const RingElem &x) {
    switch (x.ring().kind) {
    case RingKind::Gaussian:
        return RingElem(x.ring(), x.a(), -x.b());
    case RingKind::Eisenstein:
        // conj(a + b w) = a + b w^2 = (a - b) - b w
        return RingElem(x.ring(), x.a() - x.b(), -x.b());
    default:
        return x;
    }
}

Integer mod_inverse(const Integer &a, int p) {
    Integer r;
    Integer mod(p);
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw DomainError("element not invertible mod " + std::to_string(p));
    return r;
}

bool in_fundamental_domain(const RingElem &x) {
    switch (x.ring().kind) {
    case RingKind::Integers:
        return x.a() > 0;
    case RingKind::Gaussian:
        return x.a() > 0 && x.b() >= 0;
    case RingKind::Eisenstein:
        // x = s*1 + t*(1+w) with s > 0, t >= 0, i.e. a > b >= 0.
        return x.b() >= 0 && x.a() > x.b();
    case RingKind::PrimeField:
        return x.is_one();
    }
    return false;
}

} // namespace

bool is_prime(long n) {
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

RingId RingId::prime_field(int p) {
    if (!is_prime(p))
        throw DomainError("PrimeField requires a prime, got " + std::to_string(p));
    if (p > kMaxFieldPrime)
        throw DomainError("PrimeField limited to p <= " + std::to_string(kMaxFieldPrime));
    return {RingKind::PrimeField, p};
}

std::string RingId::name() const {
    switch (kind) {
    case RingKind::Integers:
        return "Z";
    case RingKind::Gaussian:
        return "Z[i]";
    case RingKind::Eisenstein:
        return "Z[w]";
    case RingKind::PrimeField:
        return "F" + std::to_string(p);
    }
    return "?";
}

RingId parse_ring(std::string_view text) {
    std::string t(text);
    if (t == "Z" || t == "z" || t == "int" || t == "integers")
        return RingId::integers();
    if (t == "Z[i]" || t == "gauss" || t == "gaussian")
        return RingId::gaussian();
    if (t == "Z[w]" || t == "eis" || t == "eisenstein")
        return RingId::eisenstein();
    if (t.size() > 1 && (t[0] == 'F' || t[0] == 'f')) {
        std::string digits = t.substr(1);
        if (!digits.empty() && std::isdigit(static_cast<unsigned char>(digits[0])))
            return RingId::prime_field(std::stoi(digits));
    }
    throw DomainError("unknown ring '" + t + "'");
}

RingElem::RingElem(RingId ring, Integer a, Integer b)
    : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
    normalize();
}

void RingElem::normalize() {
    switch (ring_.kind) {
    case RingKind::Integers:
        if (b_ != 0)
            throw DomainError("integer element with nonzero imaginary part");
        break;
    case RingKind::PrimeField: {
        if (b_ != 0)
            throw DomainError("field element with nonzero second coordinate");
        Integer r;
        Integer mod(ring_.p);
        mpz_fdiv_r(r.get_mpz_t(), a_.get_mpz_t(), mod.get_mpz_t());
        a_ = r;
        break;
    }
    default:
        break;
    }
}

bool RingElem::is_unit() const {
    if (ring_.is_field())
        return !is_zero();
    return norm() == 1;
}

Integer RingElem::norm() const {
    switch (ring_.kind) {
    case RingKind::Integers:
        return abs(a_);
    case RingKind::Gaussian:
        return a_ * a_ + b_ * b_;
    case RingKind::Eisenstein:
        return a_ * a_ - a_ * b_ + b_ * b_;
    case RingKind::PrimeField:
        return is_zero() ? 0 : 1;
    }
    return 0;
}

RingElem RingElem::operator-() const { return RingElem(ring_, -a_, -b_); }

RingElem &RingElem::operator+=(const RingElem &o) {
    require_same(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

RingElem &RingElem::operator-=(const RingElem &o) {
    require_same(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

RingElem &RingElem::operator*=(const RingElem &o) {
    require_same(*this, o);
    switch (ring_.kind) {
    case RingKind::Integers:
    case RingKind::PrimeField:
        a_ *= o.a_;
        break;
    case RingKind::Gaussian: {
        Integer a = a_ * o.a_ - b_ * o.b_;
        Integer b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        break;
    }
    case RingKind::Eisenstein: {
        // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
        Integer bd = b_ * o.b_;
        Integer a = a_ * o.a_ - bd;
        Integer b = a_ * o.b_ + b_ * o.a_ - bd;
        a_ = std::move(a);
        b_ = std::move(b);
        break;
    }
    }
    normalize();
    return *this;
}

bool operator<(const RingElem &x, const RingElem &y) {
    if (!(x.ring_ == y.ring_))
        return x.ring_ < y.ring_;
    if (x.a_ != y.a_)
        return x.a_ < y.a_;
    return x.b_ < y.b_;
}

std::string RingElem::to_string() const {
    std::ostringstream os;
    switch (ring_.kind) {
    case RingKind::Integers:
    case RingKind::PrimeField:
        os << a_;
        break;
    case RingKind::Gaussian:
    case RingKind::Eisenstein: {
        const char *unit = ring_.kind == RingKind::Gaussian ? "i" : "w";
        if (b_ == 0) {
            os << a_;
        } else if (a_ == 0) {
            os << b_ << unit;
        } else {
            os << a_ << (b_ > 0 ? "+" : "") << b_ << unit;
        }
        break;
    }
    }
    return os.str();
}

std::pair<RingElem, RingElem> euclid_div(const RingElem &a, const RingElem &b) {
    require_same(a, b);
    if (b.is_zero())
        throw DomainError("division by zero");
    const RingId ring = a.ring();
    switch (ring.kind) {
    case RingKind::Integers: {
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.a().get_mpz_t(), b.a().get_mpz_t());
        return {RingElem(ring, q), RingElem(ring, r)};
    }
    case RingKind::PrimeField: {
        RingElem q(ring, a.a() * mod_inverse(b.a(), ring.p));
        return {q, RingElem::zero(ring)};
    }
    case RingKind::Gaussian:
    case RingKind::Eisenstein: {
        // a/b = a*conj(b)/N(b); round each coordinate to the nearest integer.
        RingElem num = a * conjugate(b);
        Integer n = b.norm();
        RingElem q(ring, round_div(num.a(), n), round_div(num.b(), n));
        RingElem r = a - q * b;
        return {q, r};
    }
    }
    throw DomainError("unsupported ring");
}

std::vector<RingElem> units(RingId ring) {
    std::vector<RingElem> out;
    switch (ring.kind) {
    case RingKind::Integers:
        out = {RingElem::from_int(ring, 1), RingElem::from_int(ring, -1)};
        break;
    case RingKind::Gaussian:
        out = {RingElem::from_int(ring, 1), RingElem::from_int(ring, 0, 1),
               RingElem::from_int(ring, -1), RingElem::from_int(ring, 0, -1)};
        break;
    case RingKind::Eisenstein:
        // 1, 1+w, w, -1, -1-w, -w  (counter-clockwise powers of -w^2 = 1+w)
        out = {RingElem::from_int(ring, 1),  RingElem::from_int(ring, 1, 1),
               RingElem::from_int(ring, 0, 1), RingElem::from_int(ring, -1),
               RingElem::from_int(ring, -1, -1), RingElem::from_int(ring, 0, -1)};
        break;
    case RingKind::PrimeField:
        for (int x = 1; x < ring.p; ++x)
            out.push_back(RingElem::from_int(ring, x));
        break;
    }
    return out;
}

RingElem canonical_unit(const RingElem &a) {
    if (a.is_zero())
        throw DomainError("canonical_unit of zero");
    if (a.ring().is_field())
        return unit_inverse(a);
    for (const RingElem &u : units(a.ring()))
        if (in_fundamental_domain(u * a))
            return u;
    throw Error("no unit brings " + a.to_string() + " into the fundamental domain");
}

RingElem unit_inverse(const RingElem &u) {
    if (u.ring().is_field()) {
        if (u.is_zero())
            throw DomainError("inverse of zero");
        return RingElem(u.ring(), mod_inverse(u.a(), u.ring().p));
    }
    if (!u.is_unit())
        throw DomainError(u.to_string() + " is not a unit");
    for (const RingElem &v : units(u.ring()))
        if ((u * v).is_one())
            return v;
    throw Error("unit inverse not found");
}

RingElem gcd(const RingElem &a, const RingElem &b) {
    require_same(a, b);
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd of two zeros");
    RingElem x = a, y = b;
    while (!y.is_zero()) {
        RingElem r = euclid_div(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return canonical_unit(x) * x;
}

bool divides(const RingElem &d, const RingElem &a) {
    require_same(d, a);
    if (d.is_zero())
        return a.is_zero();
    return euclid_div(a, d).second.is_zero();
}

RingElem exact_quotient(const RingElem &a, const RingElem &d) {
    auto [q, r] = euclid_div(a, d);
    if (!r.is_zero())
        throw DomainError(d.to_string() + " does not divide " + a.to_string());
    return q;
}

CoeffRing CoeffRing::fp(int p) {
    if (!is_prime(p))
        throw DomainError("F_p coefficients require a prime, got " + std::to_string(p));
    return {CoeffKind::Fp, p};
}

std::string CoeffRing::name() const {
    switch (kind) {
    case CoeffKind::Z:
        return "Z";
    case CoeffKind::ZHalf:
        return "ZHalf";
    case CoeffKind::Q:
        return "Q";
    case CoeffKind::Fp:
        return "F" + std::to_string(p);
    }
    return "?";
}

CoeffRing parse_coeff(std::string_view text) {
    std::string t(text);
    if (t == "Z")
        return CoeffRing::integers();
    if (t == "ZHalf" || t == "Z[1/2]")
        return CoeffRing::z_half();
    if (t == "Q")
        return CoeffRing::rationals();
    if (t.size() > 1 && (t[0] == 'F' || t[0] == 'f') &&
        std::isdigit(static_cast<unsigned char>(t[1])))
        return CoeffRing::fp(std::stoi(t.substr(1)));
    throw DomainError("unknown coefficient ring '" + t + "'");
}

} // namespace framelab
