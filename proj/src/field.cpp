#include "asq/field.hpp"

#include <string>

namespace asq {

namespace {

constexpr std::int64_t kFieldCap = 1 << 20;

// Dense polynomial over GF(p), coeffs[i] multiplies x^i. Trailing zeros allowed.
using Poly = std::vector<int>;

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// a mod b, b monic of positive degree.
Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
    const int db = poly_deg(b);
    for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
        const std::int64_t lead = a[da];
        if (lead == 0) continue;
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            std::int64_t v = a[i + shift] - lead * b[i] % p;
            a[i + shift] = static_cast<int>(((v % p) + p) % p);
        }
    }
    return a;
}

bool poly_divides(const Poly& div, const Poly& a, std::int64_t p) {
    return poly_deg(poly_mod(a, div, p)) < 0;
}

// Irreducibility over GF(p) by exhausting monic divisors of degree 1..f/2.
// Divisibility by any reducible divisor implies divisibility by one of its
// irreducible factors, so testing all monic polynomials is sound.
bool is_irreducible(const Poly& m, std::int64_t p, int f) {
    Poly div;
    for (int e = 1; e <= f / 2; ++e) {
        std::int64_t count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        div.assign(e + 1, 0);
        div[e] = 1;
        for (std::int64_t k = 0; k < count; ++k) {
            std::int64_t v = k;
            for (int i = 0; i < e; ++i) {
                div[i] = static_cast<int>(v % p);
                v /= p;
            }
            if (poly_divides(div, m, p)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldCtx FieldCtx::make(std::int64_t p, int f) {
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (f < 1)
        throw Error(ErrorCode::SizeCap, "exponent f must be >= 1, got " + std::to_string(f));

    std::int64_t q = 1;
    for (int i = 0; i < f; ++i) {
        q *= p;
        if (q > kFieldCap)
            throw Error(ErrorCode::SizeCap,
                        "p^f exceeds the desk-scale cap 2^20 (p=" + std::to_string(p) +
                            ", f=" + std::to_string(f) + ")");
    }

    FieldCtx ctx;
    ctx.pp_ = PrimePower{p, f, q};

    // Modulus: x for f = 1, else the first irreducible in the fixed enumeration.
    if (f == 1) {
        ctx.modulus_ = {0, 1};
    } else {
        Poly m(f + 1, 0);
        m[f] = 1;
        bool found = false;
        for (std::int64_t k = 0; k < q && !found; ++k) {
            std::int64_t v = k;
            for (int i = 0; i < f; ++i) {
                m[i] = static_cast<int>(v % p);
                v /= p;
            }
            found = is_irreducible(m, p, f);
        }
        if (!found)
            throw Error(ErrorCode::DecompositionUnstable, "no irreducible modulus found");
        ctx.modulus_ = m;
    }

    // Multiplication on raw indices via polynomial arithmetic (tables not built yet).
    auto raw_mul = [&](std::int64_t a, std::int64_t b) -> std::int64_t {
        Poly pa(f, 0), pb(f, 0);
        std::int64_t va = a, vb = b;
        for (int i = 0; i < f; ++i) {
            pa[i] = static_cast<int>(va % p);
            va /= p;
            pb[i] = static_cast<int>(vb % p);
            vb /= p;
        }
        Poly prod(2 * f - 1, 0);
        for (int i = 0; i < f; ++i) {
            if (pa[i] == 0) continue;
            for (int j = 0; j < f; ++j)
                prod[i + j] = static_cast<int>((prod[i + j] + static_cast<std::int64_t>(pa[i]) * pb[j]) % p);
        }
        prod = poly_mod(std::move(prod), ctx.modulus_, p);
        std::int64_t idx = 0, mult = 1;
        for (int i = 0; i < f; ++i) {
            idx += (i < static_cast<int>(prod.size()) ? prod[i] : 0) * mult;
            mult *= p;
        }
        return idx;
    };

    // Primitive element: smallest index whose power sequence walks all q-1
    // nonzero elements before returning to 1. The walk doubles as the exp table.
    ctx.exp_.assign(q - 1, 0);
    ctx.log_.assign(q, -1);
    bool found_gamma = false;
    for (std::int64_t cand = 1; cand < q && !found_gamma; ++cand) {
        std::int64_t cur = 1;
        std::int64_t steps = 0;
        ctx.exp_[0] = 1;
        for (;;) {
            cur = raw_mul(cur, cand);
            ++steps;
            if (cur == 1) break;
            if (steps < q - 1) ctx.exp_[steps] = static_cast<std::int32_t>(cur);
        }
        if (steps == q - 1) {
            ctx.gamma_ = cand;
            found_gamma = true;
        }
    }
    if (!found_gamma)
        throw Error(ErrorCode::DecompositionUnstable, "no primitive element found");

    // exp_ currently holds gamma^1 at position 1 only if cand stayed; rebuild
    // cleanly from gamma and certify bijectivity onto the nonzero elements.
    std::int64_t cur = 1;
    for (std::int64_t k = 0; k < q - 1; ++k) {
        ctx.exp_[k] = static_cast<std::int32_t>(cur);
        if (ctx.log_[cur] != -1)
            throw Error(ErrorCode::DecompositionUnstable, "primitive element certification failed");
        ctx.log_[cur] = static_cast<std::int32_t>(k);
        cur = raw_mul(cur, ctx.gamma_);
    }
    if (cur != 1)
        throw Error(ErrorCode::DecompositionUnstable, "primitive element certification failed");

    return ctx;
}

std::int64_t FieldCtx::encode(const FieldElement& e) const {
    if (static_cast<int>(e.coeffs.size()) != pp_.f)
        throw Error(ErrorCode::DimMismatch, "FieldElement has wrong coefficient count");
    std::int64_t idx = 0, mult = 1;
    for (int i = 0; i < pp_.f; ++i) {
        int c = e.coeffs[i];
        if (c < 0 || c >= pp_.p)
            throw Error(ErrorCode::IndexOutOfRange, "coefficient not reduced mod p");
        idx += c * mult;
        mult *= pp_.p;
    }
    return idx;
}

FieldElement FieldCtx::decode(std::int64_t idx) const {
    if (idx < 0 || idx >= pp_.q)
        throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
    FieldElement e;
    e.coeffs.resize(pp_.f);
    for (int i = 0; i < pp_.f; ++i) {
        e.coeffs[i] = static_cast<int>(idx % pp_.p);
        idx /= pp_.p;
    }
    return e;
}

std::int64_t FieldCtx::add(std::int64_t a, std::int64_t b) const {
    std::int64_t r = 0, mult = 1;
    for (int i = 0; i < pp_.f; ++i) {
        r += ((a % pp_.p) + (b % pp_.p)) % pp_.p * mult;
        a /= pp_.p;
        b /= pp_.p;
        mult *= pp_.p;
    }
    return r;
}

std::int64_t FieldCtx::neg(std::int64_t a) const {
    std::int64_t r = 0, mult = 1;
    for (int i = 0; i < pp_.f; ++i) {
        r += (pp_.p - (a % pp_.p)) % pp_.p * mult;
        a /= pp_.p;
        mult *= pp_.p;
    }
    return r;
}

std::int64_t FieldCtx::sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

std::int64_t FieldCtx::mul(std::int64_t a, std::int64_t b) const {
    if (a == 0 || b == 0) return 0;
    const std::int64_t m = pp_.q - 1;
    return exp_[(log_[a] + log_[b]) % m];
}

std::int64_t FieldCtx::pow(std::int64_t base, std::int64_t e) const {
    if (base == 0) return e == 0 ? 1 : 0;
    const std::int64_t m = pp_.q - 1;
    std::int64_t k = (log_[base] % m) * (e % m) % m;
    return exp_[k];
}

std::int64_t FieldCtx::discrete_log(std::int64_t a) const {
    if (a <= 0 || a >= pp_.q)
        throw Error(ErrorCode::IndexOutOfRange, "discrete_log of zero or out-of-range element");
    return log_[a];
}

std::optional<int> FieldCtx::cyclotomic_class(int d, std::int64_t x) const {
    if (d <= 1 || (pp_.q - 1) % d != 0)
        throw Error(ErrorCode::BadDivisor,
                    "class count d = " + std::to_string(d) + " must satisfy d > 1 and d | q-1");
    if (x < 0 || x >= pp_.q)
        throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
    if (x == 0) return std::nullopt;
    return static_cast<int>(log_[x] % d);
}

std::optional<int> FieldCtx::cyclotomic_class(int d, const FieldElement& x) const {
    return cyclotomic_class(d, encode(x));
}

}  // namespace asq
