#include "grastor/scalar.hpp"

#include <sstream>

namespace grastor {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

uint32_t mod_inverse(uint32_t x, uint32_t p) {
    if (x % p == 0) throw NotInvertible("zero is not invertible in GF(" + std::to_string(p) + ")");
    return static_cast<uint32_t>(mod_pow(x, p - 2, p));
}

long parse_long(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw Error("bad scalar literal: '" + s + "'");
    return std::stol(s.substr(start, pos - start));
}

}  // namespace

uint32_t least_nonresidue(uint32_t p) {
    if (p == 2) throw Error("GF(4) extension by nonresidue is undefined at p = 2");
    for (uint32_t d = 2; d < p; ++d)
        if (mod_pow(d, (p - 1) / 2, p) == p - 1) return d;
    throw Error("no quadratic nonresidue found (p not an odd prime?)");
}

Ring Ring::gf(uint32_t p) {
    if (!is_prime(p)) throw Error("GF(p) requires prime p, got " + std::to_string(p));
    Ring r;
    r.kind_ = RingKind::prime_field;
    r.p_ = p;
    return r;
}

Ring Ring::gf2(uint32_t p, Involution inv) {
    if (!is_prime(p)) throw Error("GF(p^2) requires prime p, got " + std::to_string(p));
    Ring r;
    r.kind_ = RingKind::quadratic_field;
    r.p_ = p;
    r.d_ = least_nonresidue(p);
    r.inv_ = inv;
    return r;
}

Ring Ring::rationals() {
    Ring r;
    r.kind_ = RingKind::rationals;
    r.p_ = 0;
    return r;
}

Ring Ring::with_dual_depth(int depth) const {
    if (depth < 0 || depth > 2) throw Error("dual depth must be 0, 1 or 2");
    Ring r = *this;
    r.depth_ = depth;
    return r;
}

Ring Ring::base() const { return with_dual_depth(0); }

uint64_t Ring::cardinality() const {
    if (kind_ == RingKind::rationals) throw NotEnumerable("rationals are not enumerable");
    uint64_t base = kind_ == RingKind::prime_field ? p_ : uint64_t(p_) * p_;
    uint64_t n = 1;
    for (int i = 0; i < (1 << depth_); ++i) n *= base;
    return n;
}

std::string Ring::to_string() const {
    std::string s;
    switch (kind_) {
        case RingKind::prime_field: s = "gf(" + std::to_string(p_) + ")"; break;
        case RingKind::quadratic_field:
            s = "gf(" + std::to_string(p_) + "^2)";
            if (inv_ == Involution::identity) s += "[id]";
            break;
        case RingKind::rationals: s = "rational"; break;
    }
    if (depth_ == 1) s += "[e]";
    if (depth_ == 2) s += "[e1,e2]";
    return s;
}

Ring Ring::parse(const std::string& text) {
    std::string s = text;
    int depth = 0;
    auto strip_suffix = [&s](const std::string& suf) {
        if (s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
            s.resize(s.size() - suf.size());
            return true;
        }
        return false;
    };
    if (strip_suffix("[e1,e2]")) depth = 2;
    else if (strip_suffix("[e]")) depth = 1;
    Involution inv = Involution::conjugation;
    if (strip_suffix("[id]")) inv = Involution::identity;

    Ring r;
    if (s == "rational" || s == "q" || s == "Q") {
        r = rationals();
    } else if (s.rfind("gf(", 0) == 0 && s.back() == ')') {
        std::string body = s.substr(3, s.size() - 4);
        auto caret = body.find("^2");
        if (caret != std::string::npos) {
            r = gf2(static_cast<uint32_t>(std::stoul(body.substr(0, caret))), inv);
        } else {
            r = gf(static_cast<uint32_t>(std::stoul(body)));
        }
    } else {
        throw Error("cannot parse ring '" + text + "'");
    }
    return r.with_dual_depth(depth);
}

// ---------------------------------------------------------------------------
// base-coefficient arithmetic

Scalar::Fq Scalar::fq_add(const Ring& r, Fq x, Fq y) {
    uint32_t p = r.p();
    return {static_cast<uint32_t>((uint64_t(x.a) + y.a) % p),
            static_cast<uint32_t>((uint64_t(x.b) + y.b) % p)};
}

Scalar::Fq Scalar::fq_sub(const Ring& r, Fq x, Fq y) {
    uint32_t p = r.p();
    return {static_cast<uint32_t>((uint64_t(x.a) + p - y.a) % p),
            static_cast<uint32_t>((uint64_t(x.b) + p - y.b) % p)};
}

Scalar::Fq Scalar::fq_neg(const Ring& r, Fq x) { return fq_sub(r, Fq{}, x); }

Scalar::Fq Scalar::fq_mul(const Ring& r, Fq x, Fq y) {
    uint64_t p = r.p();
    if (r.kind() == RingKind::prime_field) return {static_cast<uint32_t>(uint64_t(x.a) * y.a % p), 0};
    // (a1 + b1 t)(a2 + b2 t) with t^2 = d
    uint64_t d = r.nonresidue();
    uint64_t a = (uint64_t(x.a) * y.a + uint64_t(x.b) * y.b % p * d) % p;
    uint64_t b = (uint64_t(x.a) * y.b + uint64_t(x.b) * y.a) % p;
    return {static_cast<uint32_t>(a), static_cast<uint32_t>(b)};
}

Scalar::Fq Scalar::fq_inv(const Ring& r, Fq x) {
    uint32_t p = r.p();
    if (r.kind() == RingKind::prime_field) return {mod_inverse(x.a, p), 0};
    // norm = a^2 - d b^2, nonzero for x != 0 since d is a nonresidue
    uint64_t d = r.nonresidue();
    uint64_t norm = (uint64_t(x.a) * x.a % p + p - uint64_t(x.b) * x.b % p * d % p) % p;
    if (norm == 0) throw NotInvertible("zero is not invertible in " + r.to_string());
    uint32_t ninv = mod_inverse(static_cast<uint32_t>(norm), p);
    return {static_cast<uint32_t>(uint64_t(x.a) * ninv % p),
            static_cast<uint32_t>(uint64_t(p - x.b) * ninv % p)};
}

Scalar::Fq Scalar::fq_conj(const Ring& r, Fq x) {
    if (r.kind() == RingKind::quadratic_field && r.involution() == Involution::conjugation)
        return {x.a, x.b == 0 ? 0 : r.p() - x.b};
    return x;
}

// ---------------------------------------------------------------------------
// storage: the rational coefficient block is allocated only when written, so
// finite-field scalars never touch the heap

const mpq_class& Scalar::qc(int i) const {
    static const mpq_class zero_q;
    return q_ ? (*q_)[i] : zero_q;
}

mpq_class& Scalar::qm(int i) {
    if (!q_) q_ = std::make_unique<Rat>();
    return (*q_)[i];
}

Scalar::Scalar(const Scalar& other) : ring_(other.ring_), f_(other.f_) {
    if (other.q_) q_ = std::make_unique<Rat>(*other.q_);
}

Scalar& Scalar::operator=(const Scalar& other) {
    if (this == &other) return *this;
    ring_ = other.ring_;
    f_ = other.f_;
    q_ = other.q_ ? std::make_unique<Rat>(*other.q_) : nullptr;
    return *this;
}

// ---------------------------------------------------------------------------
// constructors

Scalar Scalar::zero(const Ring& r) {
    Scalar s;
    s.ring_ = r;
    return s;
}

Scalar Scalar::one(const Ring& r) { return of(r, 1); }

Scalar Scalar::of(const Ring& r, long value) {
    Scalar s = zero(r);
    if (r.kind() == RingKind::rationals) {
        s.qm(0) = mpq_class(value);
    } else {
        long m = value % long(r.p());
        if (m < 0) m += r.p();
        s.f_[0].a = static_cast<uint32_t>(m);
    }
    return s;
}

Scalar Scalar::of_fraction(const Ring& r, long num, long den) {
    if (r.kind() == RingKind::rationals) {
        if (den == 0) throw NotInvertible("zero denominator");
        Scalar s = zero(r);
        s.qm(0) = mpq_class(num, den);
        s.qm(0).canonicalize();
        return s;
    }
    return of(r, num) * of(r, den).inv();
}

Scalar Scalar::quadratic(const Ring& r, long a, long b) {
    if (r.kind() != RingKind::quadratic_field) throw Error("quadratic part needs GF(p^2)");
    Scalar s = of(r, a);
    long m = b % long(r.p());
    if (m < 0) m += r.p();
    s.f_[0].b = static_cast<uint32_t>(m);
    return s;
}

Scalar Scalar::epsilon(const Ring& r, int level) {
    if (level < 1 || level > r.dual_depth()) throw Error("epsilon level exceeds dual depth");
    Scalar s = zero(r);
    int idx = level;  // c[1] = e1, c[2] = e2
    if (r.kind() == RingKind::rationals) s.qm(idx) = 1;
    else s.f_[idx].a = 1;
    return s;
}

Scalar Scalar::from_parts(const Ring& r, const std::array<Scalar, 4>& parts) {
    Scalar s = zero(r);
    for (int i = 0; i < s.coeff_count(); ++i) {
        const Scalar& part = parts[i];
        if (!(part.ring() == r.base())) throw Error("part ring mismatch");
        if (r.kind() == RingKind::rationals) s.qm(i) = part.qc(0);
        else s.f_[i] = part.f_[0];
    }
    return s;
}

Scalar Scalar::part(int index) const {
    if (index < 0 || index >= 4) throw Error("part index out of range");
    Scalar s = zero(ring_.base());
    if (index < coeff_count()) {
        if (ring_.kind() == RingKind::rationals) s.qm(0) = qc(index);
        else s.f_[0] = f_[index];
    }
    return s;
}

// ---------------------------------------------------------------------------
// predicates

bool Scalar::is_zero() const {
    if (ring_.kind() == RingKind::rationals) {
        for (int i = 0; i < coeff_count(); ++i)
            if (qc(i) != 0) return false;
        return true;
    }
    for (int i = 0; i < coeff_count(); ++i)
        if (f_[i].a != 0 || f_[i].b != 0) return false;
    return true;
}

bool Scalar::is_one() const { return *this == one(ring_); }

bool Scalar::is_invertible() const {
    // a dual-tower element is invertible iff its base coefficient is
    if (ring_.kind() == RingKind::rationals) return qc(0) != 0;
    return f_[0].a != 0 || f_[0].b != 0;
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (!(x.ring_ == y.ring_)) return false;
    if (x.ring_.kind() == RingKind::rationals) {
        for (int i = 0; i < x.coeff_count(); ++i)
            if (x.qc(i) != y.qc(i)) return false;
        return true;
    }
    return x.f_ == y.f_;
}

int Scalar::cmp(const Scalar& other) const {
    for (int i = 0; i < coeff_count(); ++i) {
        if (ring_.kind() == RingKind::rationals) {
            int c = ::cmp(qc(i), other.qc(i));
            if (c != 0) return c < 0 ? -1 : 1;
        } else {
            if (f_[i].a != other.f_[i].a) return f_[i].a < other.f_[i].a ? -1 : 1;
            if (f_[i].b != other.f_[i].b) return f_[i].b < other.f_[i].b ? -1 : 1;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// arithmetic

Scalar operator+(const Scalar& x, const Scalar& y) {
    if (!(x.ring_ == y.ring_)) throw Error("scalar ring mismatch");
    Scalar s = Scalar::zero(x.ring_);
    for (int i = 0; i < x.coeff_count(); ++i) {
        if (x.ring_.kind() == RingKind::rationals) s.qm(i) = x.qc(i) + y.qc(i);
        else s.f_[i] = Scalar::fq_add(x.ring_, x.f_[i], y.f_[i]);
    }
    return s;
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    if (!(x.ring_ == y.ring_)) throw Error("scalar ring mismatch");
    Scalar s = Scalar::zero(x.ring_);
    for (int i = 0; i < x.coeff_count(); ++i) {
        if (x.ring_.kind() == RingKind::rationals) s.qm(i) = x.qc(i) - y.qc(i);
        else s.f_[i] = Scalar::fq_sub(x.ring_, x.f_[i], y.f_[i]);
    }
    return s;
}

Scalar Scalar::operator-() const { return zero(ring_) - *this; }

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (!(x.ring_ == y.ring_)) throw Error("scalar ring mismatch");
    const Ring& r = x.ring_;
    Scalar s = Scalar::zero(r);
    const int n = x.coeff_count();
    if (n == 1) {
        if (r.kind() == RingKind::rationals) s.qm(0) = x.qc(0) * y.qc(0);
        else s.f_[0] = Scalar::fq_mul(r, x.f_[0], y.f_[0]);
        return s;
    }
    // multiplication mod e1^2 = e2^2 = 0: index i marks the subset of
    // epsilons present; products with a repeated epsilon vanish
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i & j) continue;
            int k = i | j;
            if (r.kind() == RingKind::rationals) s.qm(k) += x.qc(i) * y.qc(j);
            else s.f_[k] = Scalar::fq_add(r, s.f_[k], Scalar::fq_mul(r, x.f_[i], y.f_[j]));
        }
    }
    return s;
}

Scalar Scalar::inv() const {
    if (!is_invertible())
        throw NotInvertible("element " + to_string() + " is not invertible in " + ring_.to_string());
    if (coeff_count() == 1) {
        Scalar s = zero(ring_);
        if (ring_.kind() == RingKind::rationals) s.qm(0) = 1 / qc(0);
        else s.f_[0] = fq_inv(ring_, f_[0]);
        return s;
    }
    // x = c0 (1 + nilpotent); two Newton steps r <- r (2 - x r) from the exact
    // base inverse reach the exact inverse (the error term is nilpotent of
    // index <= 4 at depth 2)
    Scalar r0 = part(0).inv();
    Scalar r = from_parts(ring_, {r0, Scalar::zero(ring_.base()), Scalar::zero(ring_.base()),
                                  Scalar::zero(ring_.base())});
    Scalar two = of(ring_, 2);
    r = r * (two - *this * r);
    r = r * (two - *this * r);
    return r;
}

Scalar Scalar::conj() const {
    Scalar s = *this;
    if (ring_.kind() == RingKind::rationals) return s;
    for (int i = 0; i < coeff_count(); ++i) s.f_[i] = fq_conj(ring_, f_[i]);
    return s;
}

// ---------------------------------------------------------------------------
// enumeration / sampling

uint64_t Scalar::index() const {
    if (!ring_.is_finite_field()) throw NotEnumerable("indexing needs a finite field");
    if (ring_.kind() == RingKind::prime_field) return f_[0].a;
    return uint64_t(f_[0].a) + uint64_t(ring_.p()) * f_[0].b;
}

Scalar Scalar::from_index(const Ring& r, uint64_t index) {
    if (!r.is_finite_field()) throw NotEnumerable("indexing needs a finite field");
    Scalar s = zero(r);
    if (r.kind() == RingKind::prime_field) {
        s.f_[0].a = static_cast<uint32_t>(index % r.p());
    } else {
        s.f_[0].a = static_cast<uint32_t>(index % r.p());
        s.f_[0].b = static_cast<uint32_t>(index / r.p() % r.p());
    }
    return s;
}

Scalar Scalar::random(const Ring& r, Rng& rng) {
    Scalar s = zero(r);
    for (int i = 0; i < s.coeff_count(); ++i) {
        if (r.kind() == RingKind::rationals) {
            // small integers keep sampled identities readable and exact
            s.qm(i) = mpq_class(long(rng.below(19)) - 9);
        } else {
            s.f_[i].a = static_cast<uint32_t>(rng.below(r.p()));
            if (r.kind() == RingKind::quadratic_field)
                s.f_[i].b = static_cast<uint32_t>(rng.below(r.p()));
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// text encoding: GF(p) residues "0..p-1", GF(p^2) "a+b*t", rationals "n/d",
// dual numbers "(c0,c1)" / "(c0,c1,c2,c3)"

std::string Scalar::to_string() const {
    auto base_str = [this](int i) -> std::string {
        if (ring_.kind() == RingKind::rationals) return qc(i).get_str();
        if (ring_.kind() == RingKind::prime_field) return std::to_string(f_[i].a);
        if (f_[i].b == 0) return std::to_string(f_[i].a);
        return std::to_string(f_[i].a) + "+" + std::to_string(f_[i].b) + "*t";
    };
    if (coeff_count() == 1) return base_str(0);
    std::string s = "(";
    for (int i = 0; i < coeff_count(); ++i) {
        if (i) s += ",";
        s += base_str(i);
    }
    return s + ")";
}

Scalar Scalar::parse(const Ring& r, const std::string& text) {
    auto parse_base = [&r](const std::string& s) -> Scalar {
        Ring base = r.base();
        size_t pos = 0;
        if (base.kind() == RingKind::rationals) {
            long num = parse_long(s, pos);
            long den = 1;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den = parse_long(s, pos);
            }
            if (pos != s.size()) throw Error("bad rational literal '" + s + "'");
            return of_fraction(base, num, den);
        }
        long a = 0, b = 0;
        if (s.find('t') == std::string::npos) {
            a = parse_long(s, pos);
            if (pos != s.size()) throw Error("bad field literal '" + s + "'");
        } else {
            // accepted forms: a, t, -t, b*t, a+t, a-t, a+b*t, a-b*t
            auto parse_t_term = [&](long sign) {
                if (pos < s.size() && s[pos] == 't') {
                    b = sign;
                    ++pos;
                    return;
                }
                long num = parse_long(s, pos);
                if (pos < s.size() && s[pos] == '*') ++pos;
                if (pos >= s.size() || s[pos] != 't') throw Error("bad field literal '" + s + "'");
                ++pos;
                b = sign * num;
            };
            if (s[pos] == 't' || s[pos] == '-' || s[pos] == '+') {
                // starts directly with the t-term (possibly signed)
                long sign = 1;
                if (s[pos] == '-' || s[pos] == '+') {
                    sign = s[pos] == '-' ? -1 : 1;
                    if (s.find('t', pos) == std::string::npos)
                        throw Error("bad field literal '" + s + "'");
                    if (std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
                        ++pos;
                        parse_t_term(sign);
                    } else {
                        ++pos;
                        parse_t_term(sign);
                    }
                } else {
                    parse_t_term(1);
                }
            } else {
                long num1 = parse_long(s, pos);
                if (pos == s.size()) {
                    a = num1;
                } else if (s[pos] == '*' || s[pos] == 't') {
                    if (s[pos] == '*') ++pos;
                    if (pos >= s.size() || s[pos] != 't')
                        throw Error("bad field literal '" + s + "'");
                    ++pos;
                    b = num1;
                } else if (s[pos] == '+' || s[pos] == '-') {
                    a = num1;
                    long sign = s[pos] == '-' ? -1 : 1;
                    ++pos;
                    parse_t_term(sign);
                } else {
                    throw Error("bad field literal '" + s + "'");
                }
            }
            if (pos != s.size()) throw Error("bad field literal '" + s + "'");
        }
        if (base.kind() == RingKind::prime_field) {
            if (b != 0) throw Error("no 't' in GF(p)");
            return of(base, a);
        }
        return quadratic(base, a, b);
    };

    std::string s = text;
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw Error("unbalanced scalar tuple '" + text + "'");
        s = s.substr(1, s.size() - 2);
        std::array<Scalar, 4> parts = {zero(r.base()), zero(r.base()), zero(r.base()),
                                       zero(r.base())};
        size_t start = 0;
        int i = 0;
        while (start <= s.size()) {
            size_t comma = s.find(',', start);
            std::string piece =
                comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
            if (i >= (1 << r.dual_depth())) throw Error("too many dual coefficients");
            parts[i++] = parse_base(piece);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return from_parts(r, parts);
    }
    Scalar base = parse_base(s);
    if (r.dual_depth() == 0) return base;
    return from_parts(r, {base, zero(r.base()), zero(r.base()), zero(r.base())});
}

}  // namespace grastor
