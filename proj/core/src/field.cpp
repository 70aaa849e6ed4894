#include "autoseq/field.hpp"

#include <algorithm>
#include <sstream>

namespace autoseq {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CompositeP: return "CompositeP";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::ZeroSeries: return "ZeroSeries";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::NotCharPower: return "NotCharPower";
        case ErrorKind::KNotDividingR: return "KNotDividingR";
        case ErrorKind::GammaNotCoprime: return "GammaNotCoprime";
        case ErrorKind::ZeroAlpha: return "ZeroAlpha";
        case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
        case ErrorKind::RNotCharPower: return "RNotCharPower";
        case ErrorKind::PrecisionTooLow: return "PrecisionTooLow";
        case ErrorKind::PrefixTooShort: return "PrefixTooShort";
        case ErrorKind::KernelNotClosed: return "KernelNotClosed";
        case ErrorKind::WrongR: return "WrongR";
        case ErrorKind::NoNonzeroU: return "NoNonzeroU";
        case ErrorKind::NotPeriodic: return "NotPeriodic";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

constexpr long kMaxQ = 1 << 20;       // scope guard: small fields only
constexpr long kMulTableMaxQ = 1024;  // q*q table up to 2 MiB

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over F_p as int vectors (ascending), used only for
// modulus bookkeeping at construction time.
using IPoly = std::vector<int>;

void itrim(IPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly imod(IPoly a, const IPoly& m, long p) {
    // m monic
    itrim(a);
    while (a.size() >= m.size()) {
        long c = a.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            long v = a[shift + i] - c * m[i];
            a[shift + i] = static_cast<int>(((v % p) + p) % p);
        }
        itrim(a);
    }
    return a;
}

IPoly imul(const IPoly& a, const IPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
    itrim(r);
    return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const IPoly& m, long p) {
    int deg = static_cast<int>(m.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        // enumerate monic divisor candidates of degree d
        IPoly cand(d + 1, 0);
        cand[d] = 1;
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            long c = code;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<int>(c % p);
                c /= p;
            }
            if (imod(m, cand, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::shared_ptr<const FieldCtx> FieldCtx::make(long p, int s,
                                               const std::vector<long>& modulus) {
    if (!is_prime(p))
        throw Error(ErrorKind::CompositeP, "p = " + std::to_string(p) + " is not prime");
    if (s < 1) throw Error(ErrorKind::InvalidArgument, "s must be >= 1");

    long q = 1;
    for (int i = 0; i < s; ++i) {
        q *= p;
        if (q > kMaxQ)
            throw Error(ErrorKind::InvalidArgument, "field too large for this library");
    }

    IPoly mod;
    if (!modulus.empty()) {
        if (static_cast<int>(modulus.size()) != s + 1)
            throw Error(ErrorKind::InvalidArgument,
                        "modulus must list s+1 coefficients, ascending");
        mod.resize(s + 1);
        for (int i = 0; i <= s; ++i)
            mod[i] = static_cast<int>(((modulus[i] % p) + p) % p);
        if (mod[s] != 1)
            throw Error(ErrorKind::InvalidArgument, "modulus must be monic");
        if (s >= 2 && !is_irreducible(mod, p))
            throw Error(ErrorKind::ReducibleModulus, "modulus factors over F_p");
    } else if (s == 1) {
        mod = {0, 1};  // prime field convention: X + 0
    } else {
        // smallest monic irreducible, lexicographic on (c0,...,c_{s-1})
        long count = q;
        mod.assign(s + 1, 0);
        mod[s] = 1;
        bool found = false;
        for (long code = 0; code < count && !found; ++code) {
            long c = code;
            for (int i = s - 1; i >= 0; --i) {
                mod[i] = static_cast<int>(c % p);
                c /= p;
            }
            found = is_irreducible(mod, p);
        }
        if (!found)
            throw Error(ErrorKind::InvalidArgument, "no irreducible modulus found");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->s_ = s;
    ctx->q_ = q;
    ctx->modulus_ = mod;
    ctx->one_idx_ = 1;

    if (q <= kMulTableMaxQ) {
        ctx->mul_table_.resize(static_cast<std::size_t>(q) * q);
        for (long a = 0; a < q; ++a)
            for (long b = a; b < q; ++b) {
                std::uint32_t v = ctx->mul_idx_generic(static_cast<std::uint32_t>(a),
                                                       static_cast<std::uint32_t>(b));
                ctx->mul_table_[a * q + b] = v;
                ctx->mul_table_[b * q + a] = v;
            }
        ctx->inv_table_.assign(q, 0);
        for (long a = 1; a < q; ++a) {
            if (ctx->inv_table_[a] != 0) continue;
            for (long b = 1; b < q; ++b) {
                if (ctx->mul_table_[a * q + b] == ctx->one_idx_) {
                    ctx->inv_table_[a] = static_cast<std::uint32_t>(b);
                    ctx->inv_table_[b] = static_cast<std::uint32_t>(a);
                    break;
                }
            }
        }
    }
    return ctx;
}

FieldElement FieldCtx::from_index(long idx) const {
    if (idx < 0 || idx >= q_)
        throw Error(ErrorKind::InvalidArgument, "element index out of range");
    return FieldElement(this, static_cast<std::uint32_t>(idx));
}

FieldElement FieldCtx::from_coords(const std::vector<long>& coords) const {
    if (static_cast<int>(coords.size()) > s_)
        throw Error(ErrorKind::InvalidArgument, "too many coordinates for this field");
    long idx = 0, base = 1;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        long c = ((coords[i] % p_) + p_) % p_;
        idx += c * base;
        base *= p_;
    }
    return FieldElement(this, static_cast<std::uint32_t>(idx));
}

FieldElement FieldCtx::parse(const std::string& text) const {
    std::vector<long> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            coords.push_back(std::stol(part));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "bad element literal: " + text);
        }
    }
    if (coords.empty())
        throw Error(ErrorKind::InvalidArgument, "empty element literal");
    return from_coords(coords);
}

void FieldCtx::check_same(const FieldElement& a, const FieldElement& b) const {
    if (a.ctx_ != this || b.ctx_ != this)
        throw Error(ErrorKind::FieldMismatch, "elements from different field contexts");
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
    check_same(a, b);
    long ia = a.idx_, ib = b.idx_, r = 0, base = 1;
    for (int i = 0; i < s_; ++i) {
        long da = ia % p_, db = ib % p_;
        r += ((da + db) % p_) * base;
        ia /= p_;
        ib /= p_;
        base *= p_;
    }
    return FieldElement(this, static_cast<std::uint32_t>(r));
}

FieldElement FieldCtx::neg(FieldElement a) const {
    check_same(a, a);
    long ia = a.idx_, r = 0, base = 1;
    for (int i = 0; i < s_; ++i) {
        long da = ia % p_;
        r += ((p_ - da) % p_) * base;
        ia /= p_;
        base *= p_;
    }
    return FieldElement(this, static_cast<std::uint32_t>(r));
}

FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const {
    return add(a, neg(b));
}

std::uint32_t FieldCtx::mul_idx_generic(std::uint32_t a, std::uint32_t b) const {
    IPoly pa(s_), pb(s_);
    long ia = a, ib = b;
    for (int i = 0; i < s_; ++i) {
        pa[i] = static_cast<int>(ia % p_);
        pb[i] = static_cast<int>(ib % p_);
        ia /= p_;
        ib /= p_;
    }
    itrim(pa);
    itrim(pb);
    IPoly prod = imod(imul(pa, pb, p_), modulus_, p_);
    long r = 0, base = 1;
    for (std::size_t i = 0; i < prod.size(); ++i) {
        r += prod[i] * base;
        base *= p_;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t FieldCtx::mul_idx(std::uint32_t a, std::uint32_t b) const {
    if (!mul_table_.empty())
        return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_idx_generic(a, b);
}

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
    check_same(a, b);
    return FieldElement(this, mul_idx(a.idx_, b.idx_));
}

FieldElement FieldCtx::inv(FieldElement a) const {
    check_same(a, a);
    if (a.idx_ == 0)
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (!inv_table_.empty())
        return FieldElement(this, inv_table_[a.idx_]);
    return pow(a, q_ - 2);  // Fermat, for the rare large-field path
}

std::vector<int> FieldElement::coords() const {
    std::vector<int> c(static_cast<std::size_t>(ctx_->s()));
    long idx = idx_;
    for (int i = 0; i < ctx_->s(); ++i) {
        c[i] = static_cast<int>(idx % ctx_->p());
        idx /= ctx_->p();
    }
    return c;
}

std::string FieldElement::to_string() const {
    auto c = coords();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return ctx_->add(*this, o); }
FieldElement FieldElement::operator-(const FieldElement& o) const { return ctx_->sub(*this, o); }
FieldElement FieldElement::operator*(const FieldElement& o) const { return ctx_->mul(*this, o); }
FieldElement FieldElement::operator-() const { return ctx_->neg(*this); }

bool FieldElement::operator==(const FieldElement& o) const {
    if (ctx_ != o.ctx_)
        throw Error(ErrorKind::FieldMismatch, "comparing elements from different fields");
    return idx_ == o.idx_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    if (ctx_ != o.ctx_)
        throw Error(ErrorKind::FieldMismatch, "ordering elements from different fields");
    return idx_ < o.idx_;
}

FieldElement pow(FieldElement x, long n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    const FieldCtx* ctx = x.ctx();
    FieldElement acc = ctx->one();
    FieldElement base = x;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

FieldElement inv(FieldElement x) { return x.ctx()->inv(x); }

}  // namespace autoseq
