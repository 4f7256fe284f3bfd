// symineq: command-line front end for the verifiers.
//
// Exit codes: 0 every requested check holds, 1 some checked inequality
// fails (the report carries the witness), 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <symineq/io.hpp>
#include <symineq/report.hpp>
#include <symineq/symineq.hpp>

namespace {

using namespace symineq;
using report::json;

constexpr std::uint64_t kDefaultSeed = 20100418;

struct Options {
    std::string x, y, q, c;
    int r = 0;
    int r_max = 0;
    int k_max = 8;
    int grid_points = 101;
    double tol = 1e-9;
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
    std::vector<std::string> p;
    std::vector<std::string> lambda;
    std::vector<double> a;
    std::vector<int> orders;
    std::string which = "both";
    double explore_to = 0.0;
    std::size_t variants = 0;
    std::size_t samples = 0;
};

struct Outcome {
    json report;
    std::string text;
    bool pass = true;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

std::string fmt(double v, int digits = 10) {
    std::ostringstream s;
    s << std::setprecision(digits) << v;
    return s.str();
}

// "k!F" style integer rendering when the scaled value is integral.
std::string scaled(const Rational& v, int k) {
    const Rational s = v * Rational(factorial(static_cast<unsigned long>(k)));
    return to_string(s);
}

PExponent parse_p(const std::string& s) {
    if (s == "inf" || s == "+inf") return PExponent::plus_infinity();
    if (s == "-inf") return PExponent::minus_infinity();
    return PExponent(std::stod(s));
}

json p_json(const PExponent& p) {
    switch (p.kind()) {
        case PExponent::Kind::plus_infinity: return "inf";
        case PExponent::Kind::minus_infinity: return "-inf";
        default: return p.value();
    }
}

// ---------------------------------------------------------------------------

Outcome run_norms(const Options& o) {
    require(!o.x.empty(), "norms needs --x");
    const auto x = io::load_vector(o.x);
    std::vector<std::string> ps = o.p;
    if (ps.empty()) ps = {"-inf", "-1", "0", "1", "2", "inf"};
    Outcome out;
    json rows = json::array();
    std::ostringstream t;
    t << "p          ||x||_p\n";
    for (const auto& s : ps) {
        const auto p = parse_p(s);
        const double v = lp_mean(x, p);
        rows.push_back({{"p", p_json(p)}, {"mean", v}});
        t << std::left << std::setw(10) << s << " " << fmt(v, 15) << "\n";
    }
    out.report = {{"x", report::rationals(x)}, {"means", rows}, {"partial_sums", report::rationals(partial_sums_desc(x))}};
    out.text = t.str();
    return out;
}

Outcome run_fkr(const Options& o) {
    require(!o.x.empty(), "fkr needs --x");
    require(o.r >= 1, "fkr needs --r >= 1");
    const auto x = io::load_vector(o.x);
    const auto f = f_kr_all(x, o.r);
    const auto ids = f_special_identities(x, o.r);
    Outcome out;
    out.pass = ids.all();
    json scaled_coeffs = json::array();
    std::ostringstream t;
    t << "k   F_{k," << o.r << "}(x)                k!F\n";
    for (std::size_t k = 0; k < f.size(); ++k) {
        scaled_coeffs.push_back(scaled(f[k], static_cast<int>(k)));
        t << std::left << std::setw(3) << k << " " << std::setw(24) << to_string(f[k]) << " " << scaled(f[k], static_cast<int>(k))
          << "\n";
    }
    t << "identities: low_degree=" << ids.low_degree << " r_plus_one=" << ids.r_plus_one
      << (ids.r_plus_one_checked ? "" : " (vacuous)") << " top_degree=" << ids.top_degree << "\n";
    out.report = {{"x", report::rationals(x)},
                  {"r", o.r},
                  {"coeffs", report::rationals(f)},
                  {"k_factorial_coeffs", scaled_coeffs},
                  {"identities",
                   {{"low_degree", ids.low_degree},
                    {"r_plus_one", ids.r_plus_one},
                    {"r_plus_one_checked", ids.r_plus_one_checked},
                    {"top_degree", ids.top_degree}}}};
    out.text = t.str();
    return out;
}

std::string hypotheses_text(const HypothesisReport& h) {
    std::ostringstream t;
    t << "r = " << h.r << ", sums " << (h.sums_equal ? "equal" : "differ") << "\n";
    t << "k    k!F(x)          k!F(y)          ok\n";
    for (const auto& c : h.checks)
        t << std::left << std::setw(4) << c.k << " " << std::setw(15) << scaled(c.fx, c.k) << " " << std::setw(15)
          << scaled(c.fy, c.k) << " " << (c.pass ? "yes" : "NO") << "\n";
    return t.str();
}

std::string conclusions_text(const ConclusionReport& c) {
    auto worst = [](const std::vector<GridPoint>& g) {
        const GridPoint* w = nullptr;
        for (const auto& p : g)
            if (!w || p.margin < w->margin) w = &p;
        return w;
    };
    std::ostringstream t;
    if (const auto* w = worst(c.grid_low))
        t << "low grid  [0,1]: " << (c.low_pass() ? "pass" : "FAIL") << ", min margin " << fmt(w->margin) << " at p = " << fmt(w->p)
          << "\n";
    if (const auto* w = worst(c.grid_high))
        t << "high grid [1," << c.r + 1 << "]: " << (c.high_pass() ? "pass" : "FAIL") << ", min margin " << fmt(w->margin)
          << " at p = " << fmt(w->p) << (c.sums_equal ? "" : " (not asserted: sums differ)") << "\n";
    if (const auto* w = worst(c.grid_explore))
        t << "explore (uncertified) up to p = " << fmt(c.grid_explore.back().p) << ": min margin " << fmt(w->margin) << "\n";
    return t.str();
}

Outcome run_theorem1(const Options& o) {
    require(!o.x.empty() && !o.y.empty(), "theorem1 needs --x and --y");
    require((o.r >= 1) != (o.r_max >= 1), "theorem1 needs exactly one of --r or --r-max");
    require(o.grid_points >= 3, "--grid-points must be at least 3");
    require(o.tol > 0, "--tol must be positive");
    const ConclusionOptions opt{o.grid_points, o.tol, o.explore_to};

    const bool matrices = io::looks_like_matrix(o.x);
    require(matrices == io::looks_like_matrix(o.y), "--x and --y must both be vectors or both be matrices");
    RationalVector x{0}, y{0};
    IntMatrix gx(0, 0), gy(0, 0);
    if (matrices) {
        gx = gram(io::load_matrix(o.x));
        gy = gram(io::load_matrix(o.y));
        require(gx.rows() == gy.rows(), "matrices must have the same number of rows");
    } else {
        x = io::load_vector(o.x);
        y = io::load_vector(o.y);
        require(x.size() == y.size(), "--x and --y must have the same length");
    }

    Outcome out;
    if (o.r_max >= 1) {
        const auto rep = matrices ? full_report(gx, gy, o.r_max, opt) : full_report(x, y, o.r_max, opt);
        out.report = report::to_json(rep);
        out.pass = rep.certified_r == o.r_max && rep.conclusions && rep.conclusions->all_pass();
        std::ostringstream t;
        for (const auto& h : rep.per_r) t << hypotheses_text(h) << "\n";
        if (rep.certified_r > 0)
            t << "certified r = " << rep.certified_r << ", p-interval [0, " << fmt(rep.certified_upper) << "]\n";
        else
            t << "no r certified\n";
        if (rep.failure_witness) {
            const auto& [r, idx] = *rep.failure_witness;
            const auto& c = rep.per_r[static_cast<std::size_t>(r - 1)].checks[idx];
            t << "failure witness: r = " << r << ", k = " << c.k << ": " << scaled(c.fx, c.k) << " > " << scaled(c.fy, c.k)
              << " (k! scaled)\n";
        }
        if (rep.conclusions) t << conclusions_text(*rep.conclusions);
        out.text = t.str();
        return out;
    }

    const auto h = matrices ? check_hypotheses(gx, gy, o.r) : check_hypotheses(x, y, o.r);
    if (matrices) {
        x = eigenvalue_surrogate(gx);
        y = eigenvalue_surrogate(gy);
    }
    const auto c = verify_conclusions(x, y, o.r, opt);
    out.report = report::theorem1_json(h, c);
    out.pass = h.all_pass && c.all_pass();
    std::ostringstream t;
    t << hypotheses_text(h);
    if (h.all_pass)
        t << "hypotheses hold: certified p-interval [0, " << (h.sums_equal ? o.r + 1 : 1) << "]\n";
    else {
        const auto& bad = h.checks[*h.first_failure];
        t << "hypotheses fail at k = " << bad.k << ": " << scaled(bad.fx, bad.k) << " > " << scaled(bad.fy, bad.k)
          << " (k! scaled)\n";
    }
    t << conclusions_text(c);
    out.text = t.str();
    return out;
}

Outcome run_majorize(const Options& o) {
    require(!o.x.empty() && !o.y.empty(), "majorize needs --x and --y");
    const auto x = io::load_vector(o.x);
    const auto y = io::load_vector(o.y);
    require(x.size() == y.size(), "--x and --y must have the same length");
    std::vector<Rational> grid;
    for (const auto& s : o.lambda) grid.push_back(parse_rational(s));
    if (grid.empty()) grid = {Rational(1, 4), Rational(1, 2), 1, 2, 4};

    const auto v = majorizes(x, y);
    const auto psi = psi_compare(x, y, grid);
    Outcome out;
    out.pass = v.holds;
    out.report = {{"x", report::rationals(x)},
                  {"y", report::rationals(y)},
                  {"majorization", report::to_json(v)},
                  {"psi", report::to_json(psi)}};
    std::ostringstream t;
    t << "x majorizes y: " << (v.holds ? "yes" : "no") << (v.sum_equal ? "" : " (sums differ)") << "\n";
    if (v.first_violation)
        t << "first partial-sum violation at k = " << v.first_violation->k << ": " << to_string(v.first_violation->lhs) << " < "
          << to_string(v.first_violation->rhs) << "\n";
    t << "psi comparison (sum psi(x) <= sum psi(y)):\n";
    for (const auto& pt : psi.points)
        t << "  lambda = " << std::left << std::setw(8) << to_string(pt.lambda) << " " << fmt(pt.sum_x) << " vs " << fmt(pt.sum_y)
          << (pt.holds ? "" : "  FAILS") << "\n";

    if (o.samples > 0) {
        // Schur–Ostrowski quotients at random points of the same dimension.
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<long> num(0, 40);
        const int r_top = std::min<int>(3, static_cast<int>(x.size()));
        json samples = json::array();
        bool all_hold = true;
        for (std::size_t s = 0; s < o.samples; ++s) {
            std::vector<Rational> pt;
            for (std::size_t i = 0; i < x.size(); ++i) pt.emplace_back(num(rng), 4);
            for (auto& q : pt) q.canonicalize();
            const RationalVector z(pt);
            for (Family fam : {Family::F, Family::G, Family::M})
                for (int r = 1; r <= r_top; ++r)
                    for (int k = r; k <= std::min(o.k_max, 6); ++k) {
                        if (fam == Family::F && k > r * static_cast<int>(x.size())) continue;  // F vanishes there
                        const auto verdict = schur_ostrowski_sample({fam, k, r}, z);
                        all_hold = all_hold && verdict.holds;
                        if (!verdict.holds)
                            samples.push_back({{"point", report::rationals(z)},
                                               {"family", to_string(fam)},
                                               {"k", k},
                                               {"r", r},
                                               {"verdict", report::to_json(verdict)}});
                    }
        }
        out.report["schur_ostrowski"] = {{"samples", o.samples}, {"all_hold", all_hold}, {"failures", samples}};
        t << "Schur-Ostrowski sampling (" << o.samples << " points): " << (all_hold ? "all quotients have the expected sign" : "FAILURES")
          << "\n";
        out.pass = out.pass && all_hold;
    }
    out.text = t.str();
    return out;
}

Outcome run_theorem2(const Options& o) {
    require(!o.x.empty() && !o.y.empty(), "theorem2 needs --x and --y");
    require(o.k_max >= 1, "--k-max must be at least 1");
    const auto x = io::load_vector(o.x);
    const auto y = io::load_vector(o.y);
    require(x.size() == y.size(), "--x and --y must have the same length");
    const auto rep = theorem2_scan(x, y, o.k_max);
    Outcome out;
    out.pass = rep.applicable && rep.a.holds && rep.b_holds() && rep.c_holds();
    out.report = report::to_json(rep);
    std::ostringstream t;
    if (!rep.applicable) {
        t << "not applicable: sums differ\n";
    } else {
        t << "(a) x majorizes y:            " << (rep.a.holds ? "yes" : "no") << "\n";
        t << "(b) G_{k,r}(x) <= G_{k,r}(y): " << (rep.b_holds() ? "yes" : "no");
        if (rep.b_first_violation)
            t << ", first violation r = " << rep.b_cells[*rep.b_first_violation].r << ", k = " << rep.b_cells[*rep.b_first_violation].k;
        t << "\n(c) M_{k,r}(x) >= M_{k,r}(y): " << (rep.c_holds() ? "yes" : "no");
        if (rep.c_first_violation)
            t << ", first violation r = " << rep.c_cells[*rep.c_first_violation].r << ", k = " << rep.c_cells[*rep.c_first_violation].k;
        t << "\n(b) and (c) checked for k <= " << rep.k_max << " only";
        if (!rep.consistent()) t << "; the scan has not yet separated (a) from (b)/(c), try a larger --k-max";
        t << "\n";
    }
    out.text = t.str();
    return out;
}

Outcome run_spectral(const Options& o) {
    require(!o.q.empty(), "spectral needs --q");
    const auto q = io::load_matrix(o.q);
    std::vector<int> orders = o.orders;
    if (orders.empty()) orders = {o.r >= 1 ? o.r : 2};
    for (int r : orders) require(r >= 1, "--r values must be at least 1");
    const auto x = gram(q);

    auto summarize = [&](const IntMatrix& m) {
        const auto s = spectral_summary(gram(m), orders);
        json f = json::object();
        for (const auto& [r, c] : s.f_coeffs) {
            json sc = json::array();
            for (std::size_t k = 0; k < c.size(); ++k) sc.push_back(scaled(c[k], static_cast<int>(k)));
            f[std::to_string(r)] = {{"coeffs", report::rationals(c)}, {"k_factorial_coeffs", sc}};
        }
        return std::make_pair(s, json{{"q", report::to_json(m)}, {"gram", report::to_json(gram(m))}, {"e_coeffs", report::rationals(s.e_coeffs)}, {"f", f}});
    };

    Outcome out;
    const auto [summary, base] = summarize(q);
    out.report = base;
    out.report["trace"] = trace(x).get_str();
    std::ostringstream t;
    t << "X = Q Q^T, trace " << trace(x).get_str() << "\n";
    t << "det(I + tX):";
    for (const auto& e : summary.e_coeffs) t << " " << to_string(e);
    t << "\n";
    for (const auto& [r, c] : summary.f_coeffs) {
        t << "k!F_{k," << r << "}, k = 0.." << c.size() - 1 << ":";
        for (std::size_t k = 0; k < c.size(); ++k) t << " " << scaled(c[k], static_cast<int>(k));
        t << "\n";
    }
    if (o.variants > 0) {
        // Compare every sign-flip variant R against Q: F_{k,r}(Q) <= F_{k,r}(R) on [r, nr]?
        json vs = json::array();
        std::size_t holding = 0;
        const auto variants = sign_flip_variants(q, o.variants);
        for (const auto& v : variants) {
            const auto y = gram(v);
            json per_r = json::array();
            bool all = true;
            for (int r : orders) {
                const auto h = check_hypotheses(x, y, r);
                all = all && h.all_pass;
                per_r.push_back({{"r", r}, {"all_pass", h.all_pass}, {"first_failure_k", h.first_failure ? json(h.checks[*h.first_failure].k) : json(nullptr)}});
            }
            if (all) ++holding;
            vs.push_back({{"matrix", report::to_json(v)}, {"e_coeffs", report::rationals(det_I_plus_tA(y))}, {"hypotheses", per_r}});
        }
        out.report["variants"] = vs;
        t << variants.size() << " sign-flip variants; hypotheses F(QQ^T) <= F(RR^T) hold for " << holding << "\n";
    }
    out.text = t.str();
    return out;
}

Outcome run_mellin(const Options& o) {
    require(o.r >= 1, "mellin-validate needs --r >= 1");
    require(o.which == "id1" || o.which == "id2" || o.which == "both", "--which must be id1, id2 or both");
    std::vector<double> as = o.a;
    if (as.empty()) as = {0.5, 2.0};
    const double threshold = o.tol;
    Outcome out;
    json rows = json::array();
    std::ostringstream t;
    t << "which  r  p        a        rel.error\n";
    auto run = [&](mellin::Identity which, double p) {
        const auto norm = which == mellin::Identity::id1 ? mellin::integral_I(o.r, p) : mellin::integral_J(o.r, p);
        for (double a : as) {
            const double err = mellin::identity_check(which, a, p, o.r);
            const bool ok = err < threshold;
            out.pass = out.pass && ok;
            rows.push_back({{"which", mellin::to_string(which)}, {"r", o.r}, {"p", p}, {"a", a}, {"relative_error", err}, {"pass", ok}, {"normalizer", report::to_json(norm)}});
            t << std::left << std::setw(6) << mellin::to_string(which) << " " << std::setw(2) << o.r << " " << std::setw(8) << fmt(p, 6) << " "
              << std::setw(8) << fmt(a, 6) << " " << fmt(err, 3) << (ok ? "" : "  FAIL") << "\n";
        }
    };
    std::vector<double> ps;
    for (const auto& s : o.p) ps.push_back(std::stod(s));
    if (o.which != "id2") {
        const std::vector<double> p1 = ps.empty() ? std::vector<double>{0.25, 0.5, 0.75} : ps;
        for (double p : p1) run(mellin::Identity::id1, p);
    }
    if (o.which != "id1") {
        const std::vector<double> p2 = ps.empty() ? std::vector<double>{1.5, 1.0 + o.r / 2.0} : ps;
        for (double p : p2) run(mellin::Identity::id2, p);
    }
    out.report = {{"threshold", threshold}, {"checks", rows}};
    out.text = t.str();
    return out;
}

Outcome run_catalyst(const Options& o) {
    require(!o.x.empty() && !o.c.empty(), "catalyst needs --x and --c");
    const int r = o.r >= 1 ? o.r : 1;
    const auto x = io::load_vector(o.x);
    const auto cv = io::load_vector(o.c);
    const Catalyst c(std::vector<Rational>(cv.begin(), cv.end()));
    const auto tpl = SeriesTemplate::taylor(r);
    const std::size_t d = x.size() * c.size() * static_cast<std::size_t>(r);
    const auto prod = catalyst_product(x, c, tpl, d);
    const auto t_x = tensor(x, c);
    const bool agrees = prod == product_over_vector(t_x, tpl, d);
    Outcome out;
    out.pass = agrees;
    out.report = {{"x", report::rationals(x)},
                  {"c", report::rationals(cv)},
                  {"r", r},
                  {"tensor", report::rationals(t_x)},
                  {"coeffs", report::rationals(prod.coeffs())},
                  {"matches_tensor_route", agrees}};
    std::ostringstream t;
    t << "x (x) c:";
    for (const auto& v : t_x) t << " " << to_string(v);
    t << "\ncoefficients:";
    for (const auto& v : prod.coeffs()) t << " " << to_string(v);
    t << "\nmatches product over x (x) c: " << (agrees ? "yes" : "NO") << "\n";
    out.text = t.str();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifiers for symmetric-polynomial and power-mean inequalities"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", o.seed, "Seed for randomized probes");
    };
    auto vectors = [&](CLI::App* sub, bool need_y) {
        sub->add_option("--x", o.x, "Vector: JSON file or inline literal like '[1, \"3/2\"]'");
        if (need_y) sub->add_option("--y", o.y, "Second vector");
    };

    auto* norms = app.add_subcommand("norms", "l^p means of a vector");
    vectors(norms, false);
    norms->add_option("--p", o.p, "Exponents (numbers, inf, -inf)");
    common(norms);

    auto* fkr = app.add_subcommand("fkr", "All F_{k,r}(x) and their closed-form identities");
    vectors(fkr, false);
    fkr->add_option("--r", o.r, "Order r");
    common(fkr);

    auto* th1 = app.add_subcommand("theorem1", "Check the F_{k,r} hypotheses and measure the l^p conclusions");
    th1->add_option("--x", o.x, "Vector, or a matrix Q (then X = QQ^T)");
    th1->add_option("--y", o.y, "Vector, or a matrix R (then Y = RR^T)");
    th1->add_option("--r", o.r, "Single order r");
    th1->add_option("--r-max", o.r_max, "Check r = 1..r-max and certify the largest passing r");
    th1->add_option("--grid-points", o.grid_points, "Points per p-grid");
    th1->add_option("--tol", o.tol, "Margin tolerance");
    th1->add_option("--explore-to", o.explore_to, "Also sample (r+1, P] as uncertified points");
    common(th1);

    auto* maj = app.add_subcommand("majorize", "Majorization verdict and psi_lambda comparison");
    vectors(maj, true);
    maj->add_option("--lambda", o.lambda, "psi_lambda grid (rationals)");
    maj->add_option("--samples", o.samples, "Random Schur-Ostrowski sample points");
    maj->add_option("--k-max", o.k_max, "Largest k for sampling");
    common(maj);

    auto* th2 = app.add_subcommand("theorem2", "Majorization vs the G_{k,r} and M_{k,r} families");
    vectors(th2, true);
    th2->add_option("--k-max", o.k_max, "Largest k scanned");
    common(th2);

    auto* spec = app.add_subcommand("spectral", "det(I+tX) and F_{k,r} coefficients of X = QQ^T");
    spec->add_option("--q", o.q, "Integer matrix: JSON array of arrays or CSV");
    spec->add_option("--r", o.orders, "Orders r (repeatable)");
    spec->add_option("--variants", o.variants, "Compare the first N sign-flip variants of Q");
    common(spec);

    auto* mel = app.add_subcommand("mellin-validate", "Quadrature check of the Mellin identities");
    mel->add_option("--r", o.r, "Order r")->required();
    mel->add_option("--p", o.p, "Exponents p");
    mel->add_option("--a", o.a, "Scale factors a");
    mel->add_option("--which", o.which, "id1, id2 or both");
    auto* mel_tol = mel->add_option("--tol", o.tol, "Relative error threshold (default 1e-6)");
    common(mel);

    auto* cat = app.add_subcommand("catalyst", "Catalyst products and the tensor vector x (x) c");
    vectors(cat, false);
    cat->add_option("--c", o.c, "Catalyst, c_0 = 1");
    cat->add_option("--r", o.r, "Template order (default 1)");
    common(cat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Outcome out;
    std::string command;
    try {
        if (mel->parsed() && mel_tol->count() == 0) o.tol = 1e-6;
        if (norms->parsed()) command = "norms", out = run_norms(o);
        else if (fkr->parsed()) command = "fkr", out = run_fkr(o);
        else if (th1->parsed()) command = "theorem1", out = run_theorem1(o);
        else if (maj->parsed()) command = "majorize", out = run_majorize(o);
        else if (th2->parsed()) command = "theorem2", out = run_theorem2(o);
        else if (spec->parsed()) command = "spectral", out = run_spectral(o);
        else if (mel->parsed()) command = "mellin-validate", out = run_mellin(o);
        else if (cat->parsed()) command = "catalyst", out = run_catalyst(o);
    } catch (const io::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const too_large_error& e) {
        std::cerr << "error: instance too large: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    out.report["command"] = command;
    out.report["seed"] = o.seed;
    out.report["pass"] = out.pass;
    if (o.format == "json")
        std::cout << out.report.dump(2) << "\n";
    else
        std::cout << out.text << (out.pass ? "PASS" : "FAIL") << " (seed " << o.seed << ")\n";
    return out.pass ? 0 : 1;
}
