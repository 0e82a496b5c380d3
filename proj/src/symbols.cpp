#include "fhent/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "fhent/errors.hpp"
#include "fhent/special_functions.hpp"

namespace fhent {

double CouplingSpec::a_at(int j) const {
    auto it = a.find(j);
    return it == a.end() ? 0.0 : it->second;
}

double CouplingSpec::b_at(int j) const {
    auto it = b.find(j);
    return it == b.end() ? 0.0 : it->second;
}

int CouplingSpec::max_lag() const {
    int m = 0;
    for (auto& [j, v] : a) m = std::max(m, std::abs(j));
    for (auto& [j, v] : b) m = std::max(m, std::abs(j));
    return m;
}

CouplingSpec xx_preset(double alpha, int M) {
    CouplingSpec s;
    s.a = {{-1, alpha}, {0, -2.0}, {1, alpha}};
    s.alpha = alpha;
    s.gamma = 0.0;
    s.M = M;
    return s;
}

CouplingSpec xy_preset(double alpha, double gamma, int M) {
    CouplingSpec s = xx_preset(alpha, M);
    s.gamma = gamma;
    if (gamma != 0.0) s.b = {{-1, alpha * gamma}, {1, -alpha * gamma}};
    return s;
}

void validate(const CouplingSpec& spec) {
    if (spec.gamma < 0.0 || spec.gamma > 1.0) throw DomainError("coupling: gamma outside [0,1]");
    if (spec.M < 0) throw DomainError("coupling: negative M");
    for (auto& [j, v] : spec.a) {
        if (!std::isfinite(v)) throw DomainError("coupling: non-finite a");
        if (std::abs(spec.a_at(-j) - v) > 1e-14 * (1.0 + std::abs(v)))
            throw DomainError("coupling: a is not even at lag " + std::to_string(j));
    }
    for (auto& [j, v] : spec.b) {
        if (!std::isfinite(v)) throw DomainError("coupling: non-finite b");
        if (std::abs(spec.b_at(-j) + v) > 1e-14 * (1.0 + std::abs(v)))
            throw DomainError("coupling: b is not odd at lag " + std::to_string(j));
    }
}

std::map<int, double> parse_lag_map(const std::string& text) {
    std::string body = text;
    auto l = body.find('{');
    auto r = body.rfind('}');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw ConfigError("lag map must be written as {j: value, ...}");
    body = body.substr(l + 1, r - l - 1);
    std::map<int, double> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        auto c = item.find(':');
        if (c == std::string::npos) throw ConfigError("lag map entry without ':' in " + text);
        try {
            std::size_t used = 0;
            std::string ks = item.substr(0, c), vs = item.substr(c + 1);
            int k = std::stoi(ks, &used);
            if (ks.find_first_not_of(" \t", ks.find_first_not_of(" \t") + used) != std::string::npos)
                throw ConfigError("bad lag " + ks);
            double v = std::stod(vs, &used);
            if (vs.find_first_not_of(" \t", vs.find_first_not_of(" \t") + used) != std::string::npos)
                throw ConfigError("bad value " + vs);
            out[k] = v;
        } catch (const std::logic_error&) {
            throw ConfigError("cannot parse lag map entry '" + item + "'");
        }
    }
    return out;
}

CouplingSpec coupling_from_config(const std::map<std::string, std::string>& kv) {
    auto get = [&](const char* k) -> const std::string* {
        auto it = kv.find(k);
        return it == kv.end() ? nullptr : &it->second;
    };
    auto num = [](const std::string& s) {
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (s.find_first_not_of(" \t", used) != std::string::npos) throw ConfigError("bad number " + s);
            return v;
        } catch (const std::logic_error&) {
            throw ConfigError("bad number '" + s + "'");
        }
    };
    double alpha = get("alpha") ? num(*get("alpha")) : 2.0;
    double gamma = get("gamma") ? num(*get("gamma")) : 0.0;
    int M = get("m") ? int(num(*get("m"))) : 0;
    std::string model = get("model") ? *get("model") : (get("a") ? "custom" : "xx");
    CouplingSpec s;
    if (model == "xx") {
        if (gamma != 0.0) throw ConfigError("model xx requires gamma = 0");
        s = xx_preset(alpha, M);
    } else if (model == "xy") {
        s = xy_preset(alpha, gamma, M);
    } else if (model == "custom") {
        if (!get("a")) throw ConfigError("custom model needs a lag map 'a'");
        s.a = parse_lag_map(*get("a"));
        if (get("b")) s.b = parse_lag_map(*get("b"));
        s.alpha = alpha;
        s.gamma = gamma;
        s.M = M;
    } else {
        throw ConfigError("unknown model '" + model + "'");
    }
    if (model != "custom" && (get("a") || get("b")))
        throw ConfigError("lag maps are only accepted with model = custom");
    try {
        validate(s);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return s;
}

std::function<cplx(double)> lambda_function(const CouplingSpec& spec) {
    std::map<int, double> coeff;
    for (auto& [j, v] : spec.a) coeff[j] += v;
    for (auto& [j, v] : spec.b) coeff[j] -= v;
    std::vector<std::pair<int, double>> terms(coeff.begin(), coeff.end());
    return [terms](double theta) {
        cplx s = 0.0;
        for (auto& [j, v] : terms) s += v * std::polar(1.0, j * theta);
        return s;
    };
}

double EvenStepSymbol::operator()(double theta) const {
    double t = std::abs(std::remainder(theta, 2.0 * kPi));
    int crossed = int(std::upper_bound(jumps.begin(), jumps.end(), t) - jumps.begin());
    return (crossed % 2 == 0) ? value_at_zero : -value_at_zero;
}

EvenStepSymbol make_step_symbol(std::vector<double> jumps, int value_at_zero) {
    if (value_at_zero != 1 && value_at_zero != -1) throw DomainError("step symbol: value_at_zero must be +-1");
    for (std::size_t i = 0; i < jumps.size(); ++i) {
        if (!(jumps[i] > 0.0 && jumps[i] < kPi)) throw DomainError("step symbol: jump outside (0, pi)");
        if (i > 0 && !(jumps[i] > jumps[i - 1])) throw DomainError("step symbol: jumps not increasing");
    }
    return {std::move(jumps), value_at_zero};
}

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Minimizes f on [lo, hi] by golden-section search; returns the abscissa.
double golden_min(const std::function<double(double)>& f, double lo, double hi) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - r * (hi - lo), d = lo + r * (hi - lo);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - r * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + r * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

EvenStepSymbol find_jumps(const CouplingSpec& spec, int grid_size) {
    validate(spec);
    if (spec.gamma != 0.0) throw DomainError("find_jumps: requires gamma = 0");
    for (auto& [j, v] : spec.b)
        if (v != 0.0) throw DomainError("find_jumps: requires b = 0");
    if (grid_size < 8) throw DomainError("find_jumps: grid too coarse");
    auto lam = lambda_function(spec);
    std::function<double(double)> f = [&](double t) { return lam(t).real(); };

    double scale = 0.0;
    for (auto& [j, v] : spec.a) scale += std::abs(v);
    if (scale == 0.0) throw DegenerateSymbolError("find_jumps: Lambda vanishes identically");

    const int G = grid_size;
    std::vector<double> th(G + 1), v(G + 1);
    for (int i = 0; i <= G; ++i) {
        th[i] = kPi * i / G;
        v[i] = f(th[i]);
    }
    const double zero_tol = 1e-12 * scale;
    if (std::abs(v[0]) < zero_tol || std::abs(v[G]) < zero_tol)
        throw DomainError("find_jumps: Lambda vanishes at theta = 0 or pi");
    int run = 0;
    for (int i = 0; i <= G; ++i) {
        run = (std::abs(v[i]) < 1e-14 * scale) ? run + 1 : 0;
        if (run >= 3) throw DegenerateSymbolError("find_jumps: Lambda vanishes on an interval");
    }

    std::vector<double> jumps;
    for (int i = 0; i < G; ++i) {
        if (v[i] == 0.0) {
            if (i > 0 && v[i - 1] * v[i + 1] < 0.0) jumps.push_back(th[i]);
            continue;
        }
        if (v[i] * v[i + 1] < 0.0) jumps.push_back(bisect(f, th[i], th[i + 1]));
    }
    // Pairs of sign changes hidden inside a cell show up as a small local minimum of |Lambda|.
    for (int i = 1; i < G; ++i) {
        if (v[i] == 0.0 || v[i - 1] * v[i] <= 0.0 || v[i] * v[i + 1] <= 0.0) continue;
        double second = v[i - 1] - 2.0 * v[i] + v[i + 1];
        double s = v[i] > 0 ? 1.0 : -1.0;
        if (s * second <= 0.0 || std::abs(v[i]) > std::abs(v[i - 1]) || std::abs(v[i]) > std::abs(v[i + 1]))
            continue;
        auto g = [&](double t) { return s * f(t); };
        double tm = golden_min(g, th[i - 1], th[i + 1]);
        double gm = g(tm);
        if (gm < 0.0) {
            jumps.push_back(bisect(f, th[i - 1], tm));
            jumps.push_back(bisect(f, tm, th[i + 1]));
        }
        // gm within 1e-8 * scale of zero without a sign change: even-order zero, no jump.
    }
    std::sort(jumps.begin(), jumps.end());
    jumps.erase(std::unique(jumps.begin(), jumps.end(),
                            [](double x, double y) { return std::abs(x - y) < 1e-13; }),
                jumps.end());
    return make_step_symbol(std::move(jumps), v[0] > 0 ? 1 : -1);
}

double step_fourier(const EvenStepSymbol& sym, int l) {
    l = std::abs(l);
    std::vector<double> t;
    t.reserve(sym.jumps.size() + 2);
    t.push_back(0.0);
    t.insert(t.end(), sym.jumps.begin(), sym.jumps.end());
    t.push_back(kPi);
    double sum = 0.0;
    double s = sym.value_at_zero;
    for (std::size_t r = 0; r + 1 < t.size(); ++r) {
        if (l == 0) sum += s * (t[r + 1] - t[r]);
        else sum += s * (std::sin(l * t[r + 1]) - std::sin(l * t[r]));
        s = -s;
    }
    return l == 0 ? sum / kPi : sum / (kPi * l);
}

cplx FourierCoefficients::operator[](int l) const {
    if (!has(l)) throw MissingCoefficientError("Fourier coefficient " + std::to_string(l) + " not available");
    return c[std::size_t(l + l_max)];
}

FourierCoefficients smooth_fourier(const std::function<cplx(double)>& f, int l_max, int n_grid) {
    if (l_max < 0) throw DomainError("smooth_fourier: negative l_max");
    if (n_grid < 8 * std::max(l_max, 1)) throw DomainError("smooth_fourier: n_grid < 8 l_max");
    std::vector<cplx> vals(n_grid);
    for (int k = 0; k < n_grid; ++k) vals[k] = f(2.0 * kPi * k / n_grid);
    FourierCoefficients out;
    out.l_max = l_max;
    out.c.assign(2 * l_max + 1, 0.0);
    for (int l = -l_max; l <= l_max; ++l) {
        cplx s = 0.0;
        for (int k = 0; k < n_grid; ++k) {
            long phase = (long(l) * k) % n_grid;
            s += vals[k] * std::polar(1.0, -2.0 * kPi * double(phase) / n_grid);
        }
        out.c[l + l_max] = s / double(n_grid);
    }
    return out;
}

FourierCoefficients step_coefficients(const EvenStepSymbol& sym, int l_max) {
    FourierCoefficients out;
    out.l_max = l_max;
    out.c.resize(2 * l_max + 1);
    for (int l = -l_max; l <= l_max; ++l) out.c[l + l_max] = step_fourier(sym, l);
    return out;
}

}  // namespace fhent
