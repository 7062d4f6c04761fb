#include "nkit/chow.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <thread>

#include "nkit/errors.hpp"
#include "nkit/factor.hpp"

namespace nkit {

namespace {

uint64_t splitmix(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    mpz_class sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) piv++;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++) {
            for (size_t j = k + 1; j < n; j++) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

mpq_class c_n(unsigned n) {
    if (n == 0) throw DomainError("c_n: n must be >= 1");
    mpq_class s = 0;
    for (unsigned i = 1; i <= n; i++) s += mpq_class(1, 2 * (long)i);
    s.canonicalize();
    return s;
}

GaloisPointOrbit GaloisPointOrbit::from_tuple(const ProjectiveTuple& P) {
    GaloisPointOrbit orbit;
    orbit.n = P.ambient_dim();
    // normalize so the first nonzero coordinate equals 1: the remaining
    // ratios generate the field of definition of the point
    size_t i0 = 0;
    while (i0 < P.size() && P[i0].is_zero()) i0++;
    if (i0 == P.size()) throw DomainError("degenerate all-zero tuple");
    AlgebraicNumber inv = alg_inv(P[i0]);
    orbit.ratios.reserve(P.size());
    for (size_t i = 0; i < P.size(); i++) {
        if (i == i0)
            orbit.ratios.push_back(AlgebraicNumber::from_int(1));
        else if (P[i].is_zero())
            orbit.ratios.push_back(AlgebraicNumber());
        else
            orbit.ratios.push_back(alg_mul(P[i], inv));
    }
    orbit.pres = present_in_common_field(orbit.ratios);
    orbit.orbit_size = (size_t)orbit.pres.degree();
    orbit.norm = linear_norm_form(orbit.pres);
    return orbit;
}

MultiHomogeneousForm chow_form_point_orbit(const GaloisPointOrbit& orbit) {
    MultiHomogeneousForm out;
    out.n = orbit.n;
    out.blocks = 1;
    out.degrees = {(unsigned)orbit.orbit_size};
    out.form = orbit.norm.primitive;
    unsigned deg = 0;
    if (!out.form.homogeneous_in_block(0, orbit.n + 1, &deg) || deg != orbit.orbit_size)
        throw DomainError("chow form of orbit: degree check failed");
    return out;
}

namespace {

bool ternary_homogeneous(const MPoly& f, unsigned* deg) {
    if (f.nvars() != 3) return false;
    return f.homogeneous_in_block(0, 3, deg);
}

/* sufficient irreducibility checks for ternary forms: smoothness via the
 * Macaulay resultant of the partials, else specialization to a univariate
 * irreducible polynomial of full degree */
bool ternary_irreducible(const MPoly& f, unsigned delta) {
    if (delta == 1) return true;
    // partial derivatives
    std::vector<MPoly> parts;
    for (size_t v = 0; v < 3; v++) {
        MPoly d(3);
        for (auto& [e, c] : f.terms()) {
            if (e[v] == 0) continue;
            auto e2 = e;
            e2[v] -= 1;
            d.add_term(e2, c * (long)e[v]);
        }
        parts.push_back(d);
    }
    if (!parts[0].is_zero() && !parts[1].is_zero() && !parts[2].is_zero()) {
        try {
            if (macaulay_resultant_ternary(parts[0], parts[1], parts[2]) != 0)
                return true; // smooth plane curves are irreducible
        } catch (const DomainError&) {
            // fall through to specialization
        }
    }
    // shear until the x^delta coefficient is nonzero, then specialize
    for (long s = 0; s <= 4; s++) {
        // x -> x, y -> y + s x, z -> z + s^2 x ... cheap deterministic shear
        MPoly fx(3);
        std::vector<MPoly> img = {MPoly::variable(3, 0),
                                  MPoly::variable(3, 1) + MPoly::variable(3, 0).mul_scalar(s),
                                  MPoly::variable(3, 2) + MPoly::variable(3, 0).mul_scalar(s * s)};
        fx = f.substitute(img);
        std::vector<unsigned> topx(3, 0);
        topx[0] = delta;
        if (fx.terms().find(topx) == fx.terms().end()) continue;
        for (long t = -6; t <= 6; t++) {
            // g(x) = fx(x, t, 1)
            std::vector<mpz_class> g(delta + 1, 0);
            bool integral = true;
            for (auto& [e, c] : fx.terms()) {
                if (c.get_den() != 1) integral = false;
                mpz_class tp;
                mpz_class tt(t);
                mpz_pow_ui(tp.get_mpz_t(), tt.get_mpz_t(), e[1]);
                g[e[0]] += c.get_num() * tp;
            }
            if (!integral) break;
            IntPolynomial gp(std::move(g));
            if (gp.degree() != (long)delta) continue;
            if (is_irreducible(gp)) return true;
        }
    }
    return false;
}

} // namespace

PlaneCurveComponent make_plane_curve(const MPoly& f0) {
    unsigned delta = 0;
    if (!ternary_homogeneous(f0, &delta) || delta == 0)
        throw DomainError("plane curve: form must be ternary homogeneous of degree >= 1");
    MPoly f = f0.primitive_integer();
    if (!ternary_irreducible(f, delta))
        throw DomainError("plane curve: form is reducible (split it into components)");
    return PlaneCurveComponent{f, delta};
}

MultiHomogeneousForm chow_form_plane_curve(const PlaneCurveComponent& curve) {
    // hyperplanes u, v in P^2 meet in the point u x v; the Chow form is
    // f(u x v), bidegree (delta, delta)
    auto var = [](size_t i) { return MPoly::variable(6, i); };
    // u = (0,1,2), v = (3,4,5)
    MPoly c0 = var(1) * var(5) - var(2) * var(4);
    MPoly c1 = var(2) * var(3) - var(0) * var(5);
    MPoly c2 = var(0) * var(4) - var(1) * var(3);
    MPoly sub = curve.f.substitute({c0, c1, c2});
    MultiHomogeneousForm out;
    out.n = 2;
    out.blocks = 2;
    out.degrees = {curve.delta, curve.delta};
    out.form = sub.primitive_integer();
    unsigned d0 = 0, d1 = 0;
    if (!out.form.homogeneous_in_block(0, 3, &d0) ||
        !out.form.homogeneous_in_block(3, 6, &d1) || d0 != curve.delta || d1 != curve.delta)
        throw DomainError("chow form of curve: bidegree check failed");
    return out;
}

ProjectiveCycle ProjectiveCycle::of_points(size_t n,
                                           std::vector<std::pair<unsigned, ProjectiveTuple>> pts) {
    ProjectiveCycle V;
    V.n = n;
    V.dim = 0;
    for (auto& [mult, P] : pts) {
        if (P.ambient_dim() != n) throw DomainError("cycle: ambient dimension mismatch");
        if (mult == 0) throw DomainError("cycle: multiplicity must be positive");
        CycleComponent c;
        c.multiplicity = mult;
        c.point = GaloisPointOrbit::from_tuple(P);
        V.components.push_back(std::move(c));
    }
    // distinctness via the canonical primitive Chow forms
    for (size_t i = 0; i < V.components.size(); i++)
        for (size_t j = i + 1; j < V.components.size(); j++)
            if (V.components[i].point->norm.primitive == V.components[j].point->norm.primitive)
                throw DomainError("cycle: repeated component (raise the multiplicity instead)");
    return V;
}

ProjectiveCycle ProjectiveCycle::of_curves(std::vector<std::pair<unsigned, MPoly>> curves) {
    ProjectiveCycle V;
    V.n = 2;
    V.dim = 1;
    for (auto& [mult, f] : curves) {
        if (mult == 0) throw DomainError("cycle: multiplicity must be positive");
        CycleComponent c;
        c.multiplicity = mult;
        c.curve = make_plane_curve(f);
        V.components.push_back(std::move(c));
    }
    for (size_t i = 0; i < V.components.size(); i++)
        for (size_t j = i + 1; j < V.components.size(); j++)
            if (V.components[i].curve->f == V.components[j].curve->f)
                throw DomainError("cycle: repeated component (raise the multiplicity instead)");
    return V;
}

long big_d(const ProjectiveCycle& V) {
    long d = 0;
    for (auto& c : V.components) {
        if (c.point) d += (long)c.multiplicity * (long)c.point->orbit_size;
        if (c.curve) d += (long)c.multiplicity * 2 * (long)c.curve->delta;
    }
    return d;
}

MultiHomogeneousForm cycle_chow_form(const ProjectiveCycle& V) {
    if (V.components.empty()) throw DomainError("cycle_chow_form: empty cycle");
    bool points = V.dim == 0;
    size_t nv = points ? V.n + 1 : 6;
    MPoly prod = MPoly::constant(nv, 1);
    unsigned total = 0;
    for (auto& c : V.components) {
        MPoly g = points ? c.point->norm.primitive : chow_form_plane_curve(*c.curve).form;
        prod = prod * g.pow(c.multiplicity);
        total += c.multiplicity * (points ? (unsigned)c.point->orbit_size : c.curve->delta);
    }
    MultiHomogeneousForm out;
    out.n = V.n;
    out.blocks = points ? 1 : 2;
    out.degrees = points ? std::vector<unsigned>{total} : std::vector<unsigned>{total, total};
    out.form = prod.primitive_integer();
    return out;
}

namespace {

/* archimedean integral for one point orbit, closed form:
 * int log|prod_sigma <u, sigma(x)>| = sum_sigma log||sigma(x)||_2 - m c(n),
 * for the raw norm form; subtract log|content| to account for the
 * primitive representative. */
RInt orbit_arch_integral(const GaloisPointOrbit& orbit, const mpq_class& cn, double r) {
    RInt acc = RInt::exact(0);
    auto emb = orbit.pres.embeddings(r);
    mpfr_prec_t p = std::max<mpfr_prec_t>(default_precision() + 16, 96);
    for (auto& e0 : emb) {
        CInt e{e0.re.to_prec(p), e0.im.to_prec(p)};
        RInt s2 = RInt::exact(0, p);
        for (size_t i = 0; i < orbit.ratios.size(); i++)
            s2 = s2 + orbit.pres.embed(i, e).abs2();
        acc = acc + s2.log().div_ui(2);
    }
    acc = acc - RInt::exact(cn).mul_si((long)orbit.orbit_size);
    mpq_class ac = ::abs(orbit.norm.content);
    if (ac != 1) acc = acc - RInt::exact(ac).log();
    return acc;
}

RInt log_max_coeff(const MPoly& form) {
    mpz_class m = form.max_abs_coeff();
    if (m <= 0) throw DomainError("log_max_coeff: zero form");
    return RInt::exact(m).log();
}

} // namespace

RInt line_arch_closed_form(const PlaneCurveComponent& line) {
    if (line.delta != 1) throw DomainError("line_arch_closed_form: degree must be 1");
    mpz_class s = 0;
    for (auto& [e, c] : line.f.terms()) s += c.get_num() * c.get_num();
    // unitary invariance: integral = log||w||_2 + int log|(u x v)_k| and the
    // coordinate-minor constant is -(1/4 + c(2)) = -1
    return RInt::exact(s).log().div_ui(2) - RInt::exact(1);
}

CertifiedValue qmc_sphere_pair_log_integral(const MPoly& form6, uint64_t seed,
                                            size_t nodes_per_rotation,
                                            unsigned rotations) {
    using cplx = std::complex<double>;
    if (form6.nvars() != 6) throw DomainError("qmc integral needs a 6-variable form");
    // dense term table for fast evaluation
    struct Term {
        unsigned e[6];
        double c;
    };
    std::vector<Term> terms;
    unsigned maxdeg = 0;
    for (auto& [e, c] : form6.terms()) {
        Term t;
        for (int i = 0; i < 6; i++) {
            t.e[i] = e[(size_t)i];
            maxdeg = std::max(maxdeg, e[(size_t)i]);
        }
        t.c = c.get_d();
        terms.push_back(t);
    }
    // rescale to avoid double overflow on huge integer coefficients
    double scale = 0;
    for (auto& t : terms) scale = std::max(scale, std::fabs(t.c));
    for (auto& t : terms) t.c /= scale;
    double log_scale = 0;
    {
        // exact log of the max coefficient, folded back in at the end
        RInt lm = log_max_coeff(form6);
        log_scale = lm.mid_d();
    }

    static const unsigned bases[10] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    auto halton = [](uint64_t idx, unsigned base) {
        double f = 1.0, r = 0.0;
        while (idx > 0) {
            f /= base;
            r += f * (double)(idx % base);
            idx /= base;
        }
        return r;
    };
    auto sphere_point = [](double s1, double s2, double p0, double p1, double p2,
                           cplx* out) {
        double a = std::min(s1, s2), b = std::max(s1, s2);
        double t0 = a, t1 = b - a, t2 = 1.0 - b;
        double m0 = std::sqrt(t0), m1 = std::sqrt(t1), m2 = std::sqrt(t2);
        out[0] = std::polar(m0, 2 * M_PI * p0);
        out[1] = std::polar(m1, 2 * M_PI * p1);
        out[2] = std::polar(m2, 2 * M_PI * p2);
    };

    std::vector<double> means(rotations, 0.0);
    std::vector<std::thread> pool;
    unsigned hw = std::max(1u, std::min(rotations, std::thread::hardware_concurrency()));
    std::vector<unsigned> order(rotations);
    for (unsigned i = 0; i < rotations; i++) order[i] = i;

    auto run_rotation = [&](unsigned rot) {
        // random unitary pair from the seeded generator (Gaussian + QR)
        uint64_t st = seed ^ (0xabcdef12345678ull + 0x9e3779b9u * (uint64_t)(rot + 1));
        auto gauss = [&]() {
            double u1 = ((double)(splitmix(st) >> 11) + 0.5) / 9007199254740992.0;
            double u2 = ((double)(splitmix(st) >> 11) + 0.5) / 9007199254740992.0;
            return std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * M_PI * u2);
        };
        cplx U[2][3][3];
        for (int w = 0; w < 2; w++) {
            cplx a[3][3];
            for (auto& row : a)
                for (auto& z : row) z = cplx(gauss(), gauss());
            // Gram-Schmidt
            for (int i = 0; i < 3; i++) {
                for (int j = 0; j < i; j++) {
                    cplx dot = 0;
                    for (int k = 0; k < 3; k++) dot += a[i][k] * std::conj(a[j][k]);
                    for (int k = 0; k < 3; k++) a[i][k] -= dot * a[j][k];
                }
                double nr = 0;
                for (int k = 0; k < 3; k++) nr += std::norm(a[i][k]);
                nr = std::sqrt(nr);
                for (int k = 0; k < 3; k++) a[i][k] /= nr;
            }
            for (int i = 0; i < 3; i++)
                for (int k = 0; k < 3; k++) U[w][i][k] = a[i][k];
        }
        double sum = 0;
        size_t used = 0;
        std::vector<std::vector<cplx>> pows(6, std::vector<cplx>(maxdeg + 1, cplx(1)));
        for (size_t node = 0; node < nodes_per_rotation; node++) {
            uint64_t idx = (uint64_t)node + 1 + (uint64_t)rot * nodes_per_rotation;
            cplx raw[6], pt[6];
            sphere_point(halton(idx, bases[0]), halton(idx, bases[1]),
                         halton(idx, bases[2]), halton(idx, bases[3]),
                         halton(idx, bases[4]), raw);
            sphere_point(halton(idx, bases[5]), halton(idx, bases[6]),
                         halton(idx, bases[7]), halton(idx, bases[8]),
                         halton(idx, bases[9]), raw + 3);
            for (int w = 0; w < 2; w++)
                for (int i = 0; i < 3; i++) {
                    cplx acc = 0;
                    for (int k = 0; k < 3; k++) acc += U[w][i][k] * raw[3 * w + k];
                    pt[3 * w + i] = acc;
                }
            for (int v = 0; v < 6; v++)
                for (unsigned k = 1; k <= maxdeg; k++) pows[v][k] = pows[v][k - 1] * pt[v];
            cplx val = 0;
            for (auto& t : terms) {
                cplx m = t.c;
                for (int v = 0; v < 6; v++)
                    if (t.e[v]) m *= pows[(size_t)v][t.e[v]];
                val += m;
            }
            double av = std::abs(val);
            if (av < 1e-280) continue; // node on the zero divisor: skip
            sum += std::log(av);
            used++;
        }
        means[rot] = sum / (double)used + log_scale;
    };

    for (unsigned base = 0; base < rotations; base += hw) {
        pool.clear();
        for (unsigned rot = base; rot < std::min(rotations, base + hw); rot++)
            pool.emplace_back(run_rotation, rot);
        for (auto& th : pool) th.join();
    }
    double mean = 0;
    for (double m : means) mean += m;
    mean /= (double)rotations;
    double lo = means[0], hi = means[0];
    for (double m : means) {
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    double rad = 3.0 * (hi - lo) / 2.0 + 1e-9;
    RInt enc = RInt::from_double(mean) +
               RInt::from_endpoints(mpq_class(-1), mpq_class(1)) * RInt::from_double(rad);
    CertifiedValue out(enc);
    out.non_rigorous = true;
    return out;
}

PhilipponHeightReport philippon_height(const ProjectiveCycle& V) {
    PhilipponHeightReport rep;
    rep.D = big_d(V);
    rep.correction_cn = c_n((unsigned)V.n);
    rep.finite_place_sum = CertifiedValue(RInt::exact(0));
    RInt arch = RInt::exact(0);
    if (V.dim == 0) {
        rep.method = "closed_form_linear";
        double target = std::ldexp(1.0, -(int)std::min<long>((long)default_precision() / 2, 900));
        double r = 1.0 / (1 << 16);
        for (int round = 0; round < 16; round++) {
            arch = RInt::exact(0);
            for (auto& c : V.components)
                arch = arch +
                       orbit_arch_integral(*c.point, rep.correction_cn, r).mul_si((long)c.multiplicity);
            if (arch.width_d() <= target || r < 1e-270) break;
            r /= 4096;
        }
    } else {
        rep.method = "qmc";
        rep.qmc_non_rigorous = true;
        for (auto& c : V.components) {
            MultiHomogeneousForm F = chow_form_plane_curve(*c.curve);
            CertifiedValue q = qmc_sphere_pair_log_integral(F.form, 0);
            arch = arch + q.interval().mul_si((long)c.multiplicity);
        }
    }
    rep.archimedean_integral = CertifiedValue(arch);
    RInt corr = RInt::exact(rep.correction_cn).mul_si(rep.D);
    CertifiedValue total(arch + corr);
    total.non_rigorous = rep.qmc_non_rigorous;
    rep.h_ph = total;
    rep.h_ph_tilde = philippon_tilde_height(V);
    return rep;
}

CertifiedValue philippon_tilde_height(const ProjectiveCycle& V) {
    MultiHomogeneousForm F = cycle_chow_form(V);
    return CertifiedValue(log_max_coeff(F.form));
}

mpz_class sylvester_resultant_binary(const IntPolynomial& f0, const IntPolynomial& f1,
                                     unsigned degree) {
    // forms sum c_i x^i y^(D-i); coefficient vectors may have implicit
    // trailing zeros up to degree D
    size_t D = degree;
    auto coeff = [&](const IntPolynomial& f, size_t i) {
        return i < f.size() ? f[i] : mpz_class(0);
    };
    size_t N = 2 * D;
    std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N, 0));
    for (size_t r = 0; r < D; r++)
        for (size_t i = 0; i <= D; i++) M[r][r + i] = coeff(f0, D - i);
    for (size_t r = 0; r < D; r++)
        for (size_t i = 0; i <= D; i++) M[D + r][r + i] = coeff(f1, D - i);
    return bareiss_det(std::move(M));
}

namespace {

std::vector<std::vector<unsigned>> monomials_of_degree(unsigned t) {
    std::vector<std::vector<unsigned>> out;
    for (unsigned a = 0; a <= t; a++)
        for (unsigned b = 0; a + b <= t; b++) out.push_back({a, b, t - a - b});
    return out;
}

} // namespace

mpz_class macaulay_resultant_ternary(const MPoly& f0, const MPoly& f1, const MPoly& f2) {
    unsigned d0, d1, d2;
    const MPoly* fs[3] = {&f0, &f1, &f2};
    unsigned ds[3];
    for (int i = 0; i < 3; i++) {
        if (fs[i]->nvars() != 3) throw DomainError("macaulay: forms must be ternary");
        if (!fs[i]->homogeneous_in_block(0, 3, &ds[i]) || fs[i]->is_zero())
            throw DomainError("macaulay: forms must be homogeneous nonzero");
        if (!fs[i]->has_integer_coeffs())
            throw DomainError("macaulay: integer coefficients required");
    }
    d0 = ds[0];
    d1 = ds[1];
    d2 = ds[2];
    if (d0 == 0 || d1 == 0 || d2 == 0) throw DomainError("macaulay: degree 0 form");
    unsigned t = d0 + d1 + d2 - 2;
    auto mons = monomials_of_degree(t);
    std::map<std::vector<unsigned>, size_t> index;
    for (size_t i = 0; i < mons.size(); i++) index[mons[i]] = i;
    size_t N = mons.size();
    std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N, 0));
    std::vector<char> reduced_twice(N, 0);
    for (size_t r = 0; r < N; r++) {
        const auto& mu = mons[r];
        int which;
        std::vector<unsigned> quot = mu;
        if (mu[0] >= d0) {
            which = 0;
            quot[0] -= d0;
        } else if (mu[1] >= d1) {
            which = 1;
            quot[1] -= d1;
        } else {
            which = 2;
            quot[2] -= d2;
        }
        int reduced_count = (mu[0] >= d0) + (mu[1] >= d1) + (mu[2] >= d2);
        reduced_twice[r] = reduced_count >= 2;
        for (auto& [e, c] : fs[which]->terms()) {
            std::vector<unsigned> col = {quot[0] + e[0], quot[1] + e[1], quot[2] + e[2]};
            M[r][index[col]] += c.get_num();
        }
    }
    mpz_class num = bareiss_det(M);
    // denominator: minor on monomials reduced for at least two of the forms
    std::vector<size_t> sub;
    for (size_t r = 0; r < N; r++)
        if (reduced_twice[r]) sub.push_back(r);
    mpz_class den = 1;
    if (!sub.empty()) {
        std::vector<std::vector<mpz_class>> Mm(sub.size(), std::vector<mpz_class>(sub.size()));
        for (size_t i = 0; i < sub.size(); i++)
            for (size_t j = 0; j < sub.size(); j++) Mm[i][j] = M[sub[i]][sub[j]];
        den = bareiss_det(std::move(Mm));
    }
    if (den == 0) {
        // degenerate minor: retry in sheared coordinates; the resultant
        // scales by det(A)^(d0 d1 d2) with det(A) = 3 for this shear
        static thread_local int depth = 0;
        if (depth >= 2) throw ResourceError("macaulay: repeated degenerate minors");
        std::vector<MPoly> img = {
            MPoly::variable(3, 0) + MPoly::variable(3, 1),
            MPoly::variable(3, 1) + MPoly::variable(3, 2),
            MPoly::variable(3, 2) + MPoly::variable(3, 0).mul_scalar(2)};
        depth++;
        mpz_class sheared;
        try {
            sheared = macaulay_resultant_ternary(f0.substitute(img), f1.substitute(img),
                                                 f2.substitute(img));
        } catch (...) {
            depth--;
            throw;
        }
        depth--;
        if (sheared == 0) return 0;
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), 3, (unsigned long)d0 * d1 * d2);
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), sheared.get_mpz_t(), pw.get_mpz_t());
        if (rem != 0) throw DomainError("macaulay: inexact shear descale");
        return q;
    }
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw DomainError("macaulay: inexact division");
    return q;
}

} // namespace nkit
