#include "izeta/arc_oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "izeta/engine.hpp"
#include "izeta/errors.hpp"

namespace izeta {

namespace {

// ---------------------------------------------------------------------
// Finite-field table construction.  Polynomials over F_p are dense
// digit vectors, lowest degree first.

bool is_prime_long(long x) {
    if (x < 2) return false;
    for (long i = 2; i * i <= x; ++i)
        if (x % i == 0) return false;
    return true;
}

void fp_trim(std::vector<long>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m, with m monic.
std::vector<long> fp_mod(std::vector<long> a, const std::vector<long>& m, long p) {
    fp_trim(a);
    const long dm = static_cast<long>(m.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= dm) {
        const long shift = static_cast<long>(a.size()) - 1 - dm;
        const long lead = a.back();
        for (long i = 0; i <= dm; ++i)
            a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        fp_trim(a);
    }
    return a;
}

std::vector<long> fp_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    fp_trim(out);
    return out;
}

// Decode the non-leading digits of a monic polynomial of degree deg.
std::vector<long> fp_decode_monic(long code, long deg, long p) {
    std::vector<long> out(deg + 1, 0);
    for (long i = 0; i < deg; ++i) {
        out[i] = code % p;
        code /= p;
    }
    out[deg] = 1;
    return out;
}

bool fp_irreducible(const std::vector<long>& m, long p) {
    const long deg = static_cast<long>(m.size()) - 1;
    for (long dg = 1; 2 * dg <= deg; ++dg) {
        long total = 1;
        for (long i = 0; i < dg; ++i) total *= p;
        for (long code = 0; code < total; ++code) {
            const std::vector<long> g = fp_decode_monic(code, dg, p);
            if (fp_mod(m, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<long> elt_digits(long x, long p, long e) {
    std::vector<long> out(e, 0);
    for (long i = 0; i < e; ++i) {
        out[i] = x % p;
        x /= p;
    }
    return out;
}

long elt_encode(const std::vector<long>& digits, long p, long e) {
    long x = 0;
    for (long i = e - 1; i >= 0; --i)
        x = x * p + (i < static_cast<long>(digits.size()) ? digits[i] : 0);
    return x;
}

long table_order(const GFTable& F, long g) {
    long cur = g, k = 1;
    while (cur != 1) {
        cur = F.mulv(cur, g);
        if (++k > F.q) throw Error("unreachable: multiplicative order overflow");
    }
    return k;
}

std::unique_ptr<GFTable> build_field(long q) {
    if (q < 2 || q > 256)
        throw InputError("finite field size q = " + std::to_string(q) +
                         " out of range (need 2 <= q <= 256)");
    long p = 0;
    for (long c = 2; c <= q; ++c)
        if (q % c == 0) { p = c; break; }
    long e = 0;
    long pw = 1;
    while (pw < q) { pw *= p; ++e; }
    if (pw != q || !is_prime_long(p))
        throw InputError("q = " + std::to_string(q) + " is not a prime power");

    auto F = std::make_unique<GFTable>();
    F->p = p;
    F->e = e;
    F->q = q;

    // Smallest-encoding monic irreducible modulus of degree e.
    std::vector<long> modulus;
    if (e == 1) {
        modulus = {0, 1};
    } else {
        long total = 1;
        for (long i = 0; i < e; ++i) total *= p;
        for (long code = 0; code < total; ++code) {
            std::vector<long> cand = fp_decode_monic(code, e, p);
            if (fp_irreducible(cand, p)) { modulus = cand; break; }
        }
    }

    F->add.assign(q * q, 0);
    F->mul.assign(q * q, 0);
    for (long a = 0; a < q; ++a) {
        const std::vector<long> da = elt_digits(a, p, e);
        for (long b = 0; b < q; ++b) {
            const std::vector<long> db = elt_digits(b, p, e);
            std::vector<long> sum(e, 0);
            for (long i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
            F->add[a * q + b] = elt_encode(sum, p, e);
            F->mul[a * q + b] = elt_encode(fp_mod(fp_mul(da, db, p), modulus, p), p, e);
        }
    }

    if (q == 2) {
        F->generator = 1;
    } else {
        for (long g = 2; g < q; ++g)
            if (table_order(*F, g) == q - 1) { F->generator = g; break; }
    }
    F->dlog.assign(q, -1);
    long cur = 1;
    for (long k = 0; k < q - 1; ++k) {
        F->dlog[cur] = k;
        cur = F->mulv(cur, F->generator);
    }
    return F;
}

// Discrete-log table with respect to an arbitrary generator.
std::vector<long> dlog_for(const GFTable& F, long g) {
    if (g < 1 || g >= F.q || table_order(F, g) != F.q - 1)
        throw InputError("element " + std::to_string(g) + " does not generate the multiplicative group of F_" +
                         std::to_string(F.q));
    std::vector<long> dl(F.q, -1);
    long cur = 1;
    for (long k = 0; k < F.q - 1; ++k) {
        dl[cur] = k;
        cur = F.mulv(cur, g);
    }
    return dl;
}

// ---------------------------------------------------------------------
// Input reduction and shared enumeration context.

struct GFMono {
    long c = 0;  // field element
    QPoly::Exps w{};
};

long mod_p(const mpz_class& z, long p) {
    mpz_class r = z % p;
    long v = static_cast<long>(r.get_si());
    return v < 0 ? v + p : v;
}

long pow_mod(long base, long exp, long p) {
    long out = 1 % p;
    base %= p;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) out = out * base % p;
        base = base * base % p;
    }
    return out;
}

// Reduce the rational coefficients into the prime subfield, dropping
// terms that vanish in characteristic p.
std::vector<GFMono> reduce_poly(const QPoly& f, long m, const GFTable& F) {
    if (f.is_zero())
        throw ZeroPolynomial("arc oracle: the zero polynomial has no contact order");
    if (m < 1 || m > kNumVars)
        throw InputError("arc oracle: variable count m = " + std::to_string(m) +
                         " out of range");
    if (f.vars_used() >> m)
        throw InputError("arc oracle: polynomial uses a variable beyond the first " +
                         std::to_string(m));
    std::vector<GFMono> out;
    for (const auto& [exps, coeff] : f.terms()) {
        const long den = mod_p(mpz_class(coeff.get_den()), F.p);
        if (den == 0)
            throw InputError("arc oracle: coefficient denominator divisible by the "
                             "field characteristic " + std::to_string(F.p));
        const long num = mod_p(mpz_class(coeff.get_num()), F.p);
        const long c = num * pow_mod(den, F.p - 2, F.p) % F.p;
        if (c == 0) continue;
        out.push_back({c, exps});
    }
    return out;
}

void check_request(long n, long m, const RegionSpec& region, long long budget) {
    if (n < 0)
        throw InputError("arc oracle: truncation order must be nonnegative");
    if (budget < 1)
        throw InputError("arc oracle: enumeration budget must be positive");
    if (region.kind == RegionSpec::Kind::Hyperplane &&
        (region.axis < 0 || region.axis >= m))
        throw InputError("arc oracle: hyperplane axis " + std::to_string(region.axis) +
                         " outside the " + std::to_string(m) + " variables");
}

BigInt bigint_pow(long base, long exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

void check_budget(long q, long m, long n, long long budget) {
    const BigInt nominal = bigint_pow(q, m * (n + 1));
    if (nominal > BigInt(static_cast<long>(budget)))
        throw BudgetExceeded("jet budget of " + std::to_string(budget) +
                             " exceeded: the request enumerates q^{m(n+1)} = " +
                             nominal.get_str() + " candidate jets");
}

struct JetContext {
    const GFTable& F;
    long m;
    long n;
    long d;
    std::vector<long> dl;  // discrete logs for the requested generator
    std::vector<GFMono> mono;
};

// Coefficient of t^k of f applied to the truncated series whose digits
// for layers 0..k are set in x.
long coeff_at(const JetContext& ctx, const std::vector<std::vector<long>>& x, long k) {
    const GFTable& F = ctx.F;
    long total = 0;
    std::vector<long> prod(k + 1), tmp(k + 1);
    for (const GFMono& t : ctx.mono) {
        std::fill(prod.begin(), prod.end(), 0L);
        prod[0] = t.c;
        for (long i = 0; i < ctx.m; ++i) {
            for (int rep = 0; rep < t.w[static_cast<size_t>(i)]; ++rep) {
                std::fill(tmp.begin(), tmp.end(), 0L);
                for (long a = 0; a <= k; ++a) {
                    if (prod[a] == 0) continue;
                    for (long b = 0; a + b <= k; ++b) {
                        if (x[i][b] == 0) continue;
                        tmp[a + b] = F.addv(tmp[a + b], F.mulv(prod[a], x[i][b]));
                    }
                }
                prod.swap(tmp);
            }
        }
        total = F.addv(total, prod[k]);
    }
    return total;
}

void decode_layer(long code, long q, long m, long layer, std::vector<std::vector<long>>& x) {
    for (long i = 0; i < m; ++i) {
        x[i][layer] = code % q;
        code /= q;
    }
}

// Layer-0 codes allowed by the region, as base-q digit encodings.
std::vector<long long> region_codes(const JetContext& ctx, const RegionSpec& region) {
    const long q = ctx.F.q;
    if (region.kind == RegionSpec::Kind::Origin) return {0};
    long long total = 1;
    for (long i = 0; i < ctx.m; ++i) total *= q;
    std::vector<long long> out;
    if (region.kind == RegionSpec::Kind::WholeSpace) {
        out.resize(static_cast<size_t>(total));
        std::iota(out.begin(), out.end(), 0LL);
        return out;
    }
    long long stride = 1;
    for (long i = 0; i < region.axis; ++i) stride *= q;
    out.reserve(static_cast<size_t>(total / q));
    for (long long code = 0; code < total; ++code)
        if (code / stride % q == 0) out.push_back(code);
    return out;
}

struct Tally {
    unsigned long long count = 0;
    std::vector<unsigned long long> buckets;
};

// Depth-first search over the remaining layers: every required-zero
// coefficient prunes immediately, and a leaf contributes when the t^n
// coefficient is nonzero.
void dfs_layers(const JetContext& ctx, std::vector<std::vector<long>>& x, long k, Tally& out) {
    long long layer_total = 1;
    for (long i = 0; i < ctx.m; ++i) layer_total *= ctx.F.q;
    for (long long code = 0; code < layer_total; ++code) {
        decode_layer(code, ctx.F.q, ctx.m, k, x);
        const long c = coeff_at(ctx, x, k);
        if (k == ctx.n) {
            if (c != 0) {
                ++out.count;
                ++out.buckets[static_cast<size_t>(ctx.dl[c] % ctx.d)];
            }
        } else if (c == 0) {
            dfs_layers(ctx, x, k + 1, out);
        }
    }
}

ArcCountReport make_report(const JetContext& ctx, long n, const RegionSpec& region, long generator) {
    ArcCountReport rep;
    rep.q = ctx.F.q;
    rep.d = ctx.d;
    rep.n = n;
    rep.region = region;
    rep.generator = generator;
    rep.count = 0;
    rep.tallies.assign(static_cast<size_t>(ctx.d), BigInt(0));
    return rep;
}

// ---------------------------------------------------------------------
// Closed-form counting for a single monomial c * prod x_i^{w_i}: the
// contact order decomposes over the variable orders v_i with
// sum w_i v_i = n, each choice contributing (q-1) q^{n-v_i} jets per
// supported variable, and the leading coefficient's discrete log is
// uniform on a coset of gcd(d, w_i ...) Z/d, so the tallies follow in
// closed form as well.

void compositions(const std::vector<std::pair<long, long>>& vars,  // (w_i, lo_i)
                  size_t idx, long rem, long q, long n,
                  const BigInt& acc, BigInt& total) {
    const auto [w, lo] = vars[idx];
    if (idx + 1 == vars.size()) {
        if (rem % w == 0 && rem / w >= lo && rem / w <= n)
            total += acc * (q - 1) * bigint_pow(q, n - rem / w);
        return;
    }
    for (long v = lo; w * v <= rem; ++v)
        compositions(vars, idx + 1, rem - w * v, q, n,
                     acc * (q - 1) * bigint_pow(q, n - v), total);
}

ArcCountReport monomial_report(const JetContext& ctx, const GFMono& t, long n,
                               const RegionSpec& region, long generator) {
    ArcCountReport rep = make_report(ctx, n, region, generator);
    const long q = ctx.F.q;

    const auto const_forced_zero = [&](long i) {
        return region.kind == RegionSpec::Kind::Origin ||
               (region.kind == RegionSpec::Kind::Hyperplane && region.axis == i);
    };

    std::vector<std::pair<long, long>> support;  // (w_i, minimal order)
    BigInt free_factor = 1;
    for (long i = 0; i < ctx.m; ++i) {
        const long w = t.w[static_cast<size_t>(i)];
        if (w > 0)
            support.emplace_back(w, const_forced_zero(i) ? 1 : 0);
        else
            free_factor *= BigInt(const_forced_zero(i) ? 1 : q) * bigint_pow(q, n);
    }

    long G = ctx.d;  // index of the discrete-log coset the tallies fill
    if (support.empty()) {
        if (n == 0) rep.count = free_factor;
    } else {
        BigInt orders_total = 0;
        compositions(support, 0, n, q, n, BigInt(1), orders_total);
        rep.count = free_factor * orders_total;
        for (const auto& [w, lo] : support) G = std::gcd(G, w);
    }

    if (rep.count != 0) {
        const BigInt share = rep.count * G / ctx.d;
        if (share * ctx.d != rep.count * G)
            throw InvariantViolation("monomial tally share is not integral");
        const long c0 = ctx.dl[t.c] % ctx.d;
        for (long k = 0; k < ctx.d; ++k)
            if ((k - c0) % G == 0) rep.tallies[static_cast<size_t>(k)] = share;
    }
    return rep;
}

JetContext make_context(const QPoly& f, long m, long q, long d, long generator_in,
                        long* generator_out) {
    const GFTable& F = gf_field(q);
    if (d < 1 || (q - 1) % d != 0)
        throw NotDividing("character order d = " + std::to_string(d) +
                          " does not divide q - 1 = " + std::to_string(q - 1));
    const long gen = generator_in == 0 ? F.generator : generator_in;
    if (generator_out) *generator_out = gen;
    return JetContext{F, m, 0, d, gen == F.generator ? F.dlog : dlog_for(F, gen),
                      reduce_poly(f, m, F)};
}

}  // namespace

const GFTable& gf_field(long q) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<GFTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, build_field(q)).first;
    return *it->second;
}

std::vector<long> gf_generators(long q) {
    const GFTable& F = gf_field(q);
    if (q == 2) return {1};
    std::vector<long> out;
    for (long g = 1; g < q; ++g)
        if (table_order(F, g) == q - 1) out.push_back(g);
    return out;
}

ArcCountReport enumerate_jets(const QPoly& f, long m, long q, long d, long n,
                              const RegionSpec& region, long long budget,
                              long generator) {
    long gen = 0;
    JetContext ctx = make_context(f, m, q, d, generator, &gen);
    ctx.n = n;
    check_request(n, m, region, budget);
    check_budget(q, m, n, budget);

    ArcCountReport rep = make_report(ctx, n, region, gen);
    if (ctx.mono.empty()) return rep;  // f vanishes identically over F_q

    const std::vector<long long> starts = region_codes(ctx, region);
    std::vector<std::vector<long>> x(m, std::vector<long>(n + 1, 0));

    // n = 0: the constant layer is the whole jet.
    if (n == 0) {
        Tally tally;
        tally.buckets.assign(static_cast<size_t>(d), 0);
        for (long long code : starts) {
            decode_layer(code, q, m, 0, x);
            const long c = coeff_at(ctx, x, 0);
            if (c != 0) {
                ++tally.count;
                ++tally.buckets[static_cast<size_t>(ctx.dl[c] % d)];
            }
        }
        rep.count = BigInt(static_cast<unsigned long>(tally.count));
        for (long k = 0; k < d; ++k)
            rep.tallies[static_cast<size_t>(k)] =
                BigInt(static_cast<unsigned long>(tally.buckets[static_cast<size_t>(k)]));
        return rep;
    }

    // Tasks are the layer-0 choices that survive the first prune.
    std::vector<long long> tasks;
    for (long long code : starts) {
        decode_layer(code, q, m, 0, x);
        if (coeff_at(ctx, x, 0) == 0) tasks.push_back(code);
    }

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const size_t n_workers =
        std::min<size_t>({tasks.size(), hw, 16});
    const bool parallel = n_workers > 1 && bigint_pow(q, m * (n + 1)) > 100000;

    std::vector<Tally> parts(std::max<size_t>(n_workers, 1));
    for (Tally& t : parts) t.buckets.assign(static_cast<size_t>(d), 0);

    const auto worker = [&](size_t slot, size_t stride) {
        std::vector<std::vector<long>> xs(m, std::vector<long>(n + 1, 0));
        for (size_t j = slot; j < tasks.size(); j += stride) {
            decode_layer(tasks[j], q, m, 0, xs);
            dfs_layers(ctx, xs, 1, parts[slot]);
        }
    };

    if (!parallel) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (size_t s = 0; s < n_workers; ++s)
            pool.emplace_back(worker, s, n_workers);
        for (std::thread& th : pool) th.join();
    }

    // Exact merge; addition is commutative, so the result does not
    // depend on the partitioning.
    unsigned long long count = 0;
    std::vector<unsigned long long> buckets(static_cast<size_t>(d), 0);
    for (const Tally& t : parts) {
        count += t.count;
        for (long k = 0; k < d; ++k)
            buckets[static_cast<size_t>(k)] += t.buckets[static_cast<size_t>(k)];
    }
    rep.count = BigInt(static_cast<unsigned long>(count));
    for (long k = 0; k < d; ++k)
        rep.tallies[static_cast<size_t>(k)] =
            BigInt(static_cast<unsigned long>(buckets[static_cast<size_t>(k)]));
    return rep;
}

ArcCountReport count_jets(const QPoly& f, long m, long q, long n,
                          const RegionSpec& region, long long budget) {
    JetContext ctx = make_context(f, m, q, 1, 0, nullptr);
    ctx.n = n;
    check_request(n, m, region, budget);
    if (ctx.mono.size() <= 1) {
        ArcCountReport rep = make_report(ctx, n, region, ctx.F.generator);
        if (!ctx.mono.empty()) rep = monomial_report(ctx, ctx.mono[0], n, region, ctx.F.generator);
        return rep;
    }
    return enumerate_jets(f, m, q, 1, n, region, budget, 0);
}

ArcCountReport twisted_tally(const QPoly& f, long m, long q, long d, long n,
                             const RegionSpec& region, long long budget,
                             long generator) {
    long gen = 0;
    JetContext ctx = make_context(f, m, q, d, generator, &gen);
    ctx.n = n;
    check_request(n, m, region, budget);
    if (ctx.mono.size() <= 1) {
        ArcCountReport rep = make_report(ctx, n, region, gen);
        if (!ctx.mono.empty()) rep = monomial_report(ctx, ctx.mono[0], n, region, gen);
        return rep;
    }
    return enumerate_jets(f, m, q, d, n, region, budget, generator);
}

std::vector<BigInt> ord_histogram(const QPoly& f, long m, long q, long n_max,
                                  const RegionSpec& region, long long budget) {
    JetContext ctx = make_context(f, m, q, 1, 0, nullptr);
    ctx.n = n_max;
    check_request(n_max, m, region, budget);
    check_budget(q, m, n_max, budget);

    std::vector<BigInt> hist(static_cast<size_t>(n_max) + 2, BigInt(0));
    std::vector<BigInt> lift(static_cast<size_t>(n_max) + 1);
    for (long k = 0; k <= n_max; ++k)
        lift[static_cast<size_t>(k)] = bigint_pow(q, m * (n_max - k));

    std::vector<std::vector<long>> x(m, std::vector<long>(n_max + 1, 0));
    long long layer_total = 1;
    for (long i = 0; i < m; ++i) layer_total *= q;

    // Once the order is decided at layer k, the deeper layers are free
    // and lift with multiplicity q^{m(n_max-k)}.
    const auto dfs = [&](const auto& self, long k) -> void {
        const std::vector<long long> codes =
            k == 0 ? region_codes(ctx, region) : std::vector<long long>{};
        const long long total = k == 0 ? static_cast<long long>(codes.size()) : layer_total;
        for (long long idx = 0; idx < total; ++idx) {
            decode_layer(k == 0 ? codes[static_cast<size_t>(idx)] : idx, q, m, k, x);
            const long c = ctx.mono.empty() ? 0 : coeff_at(ctx, x, k);
            if (c != 0)
                hist[static_cast<size_t>(k)] += lift[static_cast<size_t>(k)];
            else if (k == n_max)
                hist[static_cast<size_t>(n_max) + 1] += 1;
            else
                self(self, k + 1);
        }
    };
    dfs(dfs, 0);
    return hist;
}

std::string ArcCountReport::to_string() const {
    std::ostringstream out;
    out << "q=" << q << " d=" << d << " n=" << n << " region=" << region.to_string()
        << " generator=" << generator << " count=" << count.get_str() << " tallies=[";
    for (size_t k = 0; k < tallies.size(); ++k) {
        if (k) out << ", ";
        out << tallies[k].get_str();
    }
    out << "]";
    return out.str();
}

namespace {

// d-th cyclotomic polynomial, by dividing z^d - 1 by the proper ones.
UniPoly cyclotomic(long d) {
    UniPoly num(static_cast<size_t>(d) + 1, Rational(0));
    num[0] = -1;
    num[static_cast<size_t>(d)] = 1;
    for (long e = 1; e < d; ++e)
        if (d % e == 0) num = uni_exact_div(num, cyclotomic(e));
    return num;
}

}  // namespace

std::string CompareReport::to_string() const {
    std::ostringstream out;
    out << "series comparison: q=" << q << " d=" << d << " n_max=" << n_max
        << " => " << (ok ? "ok" : "MISMATCH") << "\n";
    for (size_t n = 0; n < residuals.size(); ++n)
        out << "  n=" << n << ": residual " << residuals[n].get_str() << "\n";
    return out.str();
}

CompareReport compare_series(const ResolutionData& res, const QPoly& f,
                             long q, long d, long n_max, long long budget) {
    CompareReport rep;
    rep.q = q;
    rep.d = d;
    rep.n_max = n_max;
    if (n_max < 0)
        throw InputError("compare_series: n_max must be nonnegative");

    const Character alpha = d == 1 ? Character() : Character(1, d);
    const std::vector<EPoly> coeffs = motivic_zeta(res, alpha).expand_series(n_max);
    const Rational qr(q);
    const UniPoly phi = d > 1 ? cyclotomic(d) : UniPoly{};

    rep.ok = true;
    for (long n = 0; n <= n_max; ++n) {
        const Rational predicted =
            coeffs[static_cast<size_t>(n)].tate_eval(qr) *
            Rational(bigint_pow(q, res.m * (n + 1)));

        Rational residual;
        if (d == 1) {
            const ArcCountReport arc = count_jets(f, res.m, q, n, res.region, budget);
            residual = predicted - Rational(arc.count);
        } else {
            const ArcCountReport arc =
                twisted_tally(f, res.m, q, d, n, res.region, budget);
            // Compare sum_k tallies[k] zeta_d^k with the predicted value
            // inside Q(zeta_d): reduce the difference mod the cyclotomic
            // polynomial and report its size.
            UniPoly diff(static_cast<size_t>(d), Rational(0));
            for (long k = 0; k < d; ++k)
                diff[static_cast<size_t>(k)] = Rational(arc.tallies[static_cast<size_t>(k)]);
            diff[0] -= predicted;
            const UniPoly rem = uni_divmod(diff, phi).second;
            if (d == 2) {
                residual = rem.empty() ? Rational(0) : rem[0];
            } else {
                residual = 0;
                for (const Rational& c : rem) residual += (c < 0 ? -c : c);
            }
        }
        if (residual != 0) rep.ok = false;
        rep.residuals.push_back(residual);
    }
    return rep;
}

}  // namespace izeta
