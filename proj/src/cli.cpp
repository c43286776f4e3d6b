#include "lorentz/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "lorentz/batch.hpp"
#include "lorentz/core4.hpp"
#include "lorentz/lorentz_analysis.hpp"
#include "lorentz/lorentz_exp.hpp"
#include "lorentz/maxwell.hpp"
#include "lorentz/pauli.hpp"

namespace lorentz::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    Tolerance tol;
    double t = 1.0;
    std::string oracle;
};

struct Request {
    std::string command;
    std::optional<Vec3> d, h;
    std::optional<Mat4> matrix;
    Options opts;
};

constexpr const char* kCommands[] = {"classify", "exp", "eigvecs", "validate", "polar",
                                     "eigen",    "spin", "log",     "verify"};

// ---- input ----

double parse_double(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x))
        throw InputError("not a finite number: '" + std::string(s) + "'");
    return x;
}

Vec3 parse_triple(const std::string& s) {
    Vec3 v;
    std::size_t start = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t end = s.find(',', start);
        if ((k < 2) != (end != std::string::npos)) throw InputError("expected three comma-separated numbers: '" + s + "'");
        v[k] = parse_double(std::string_view(s).substr(start, end == std::string::npos ? s.npos : end - start));
        start = end + 1;
    }
    return v;
}

double number(const json& j, const char* what) {
    if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw InputError(std::string(what) + ": non-finite number");
    return x;
}

Vec3 vec3_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) throw InputError(std::string(what) + ": expected an array of 3 numbers");
    return {{number(j[0], what), number(j[1], what), number(j[2], what)}};
}

Mat4 mat4_from_json(const json& j) {
    if (j.is_object()) {
        if (!j.contains("matrix")) throw InputError("matrix: object has no \"matrix\" field");
        return mat4_from_json(j.at("matrix"));
    }
    if (!j.is_array()) throw InputError("matrix: expected a 4x4 array or 16 numbers");
    Mat4 m;
    if (j.size() == 16) {
        for (std::size_t i = 0; i < 16; ++i) m.e[i] = number(j[i], "matrix");
        return m;
    }
    if (j.size() != 4) throw InputError("matrix: expected 4 rows");
    for (std::size_t i = 0; i < 4; ++i) {
        if (!j[i].is_array() || j[i].size() != 4) throw InputError("matrix: each row needs 4 entries");
        for (std::size_t k = 0; k < 4; ++k) m(i, k) = number(j[i][k], "matrix");
    }
    return m;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Object payload: generator (d, h) and/or matrix.
void absorb_payload(const json& j, Request& req) {
    if (j.is_array()) {
        req.matrix = mat4_from_json(j);
        return;
    }
    if (!j.is_object()) throw InputError("payload must be a JSON object or matrix");
    if (j.contains("d")) req.d = vec3_from_json(j.at("d"), "d");
    if (j.contains("h")) req.h = vec3_from_json(j.at("h"), "h");
    if (j.contains("matrix")) req.matrix = mat4_from_json(j.at("matrix"));
}

Tolerance make_tolerance(double abs, double rel) {
    try {
        return Tolerance(abs, rel);
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

MaxwellGen generator_of(const Request& req) {
    if (req.d || req.h) return build(req.d.value_or(Vec3{}), req.h.value_or(Vec3{}));
    if (req.matrix) {
        const Mat4& m = *req.matrix;
        const double skew = norm(g_transpose(m) + m);
        if (!req.opts.tol.accepts(skew, std::max(1.0, norm(m))))
            throw Error(ErrorKind::InvalidArgument, "matrix is not G-skew-symmetric", skew);
        return from_matrix(m);
    }
    return build(Vec3{}, Vec3{});
}

const Mat4& matrix_of(const Request& req) {
    if (!req.matrix) throw InputError(req.command + ": a matrix is required (--matrix or --file)");
    return *req.matrix;
}

// ---- output ----

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

template <std::size_t N>
json vjson(const Vec<double, N>& v) {
    json a = json::array();
    for (double x : v.e) a.push_back(x);
    return a;
}

template <std::size_t N>
json vjson(const Vec<cplx, N>& v) {
    json a = json::array();
    for (const cplx& x : v.e) a.push_back(cjson(x));
    return a;
}

template <std::size_t N>
json mjson(const Mat<double, N>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < N; ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < N; ++j) r.push_back(m(i, j));
        rows.push_back(r);
    }
    return rows;
}

json pjson(const PauliVec& p) {
    json j;
    j["gamma"] = cjson(p.gamma);
    j["c"] = vjson(p.c);
    return j;
}

json options_json(const Request& req) {
    json o;
    o["format"] = req.opts.format;
    o["tol_abs"] = req.opts.tol.abs();
    o["tol_rel"] = req.opts.tol.rel();
    if (req.command == "exp" || req.command == "verify") o["t"] = req.opts.t;
    if (req.command == "log") o["oracle"] = req.opts.oracle.empty() ? "spin" : req.opts.oracle;
    return o;
}

json eigenpair_json(cplx value, const Vec4c& v, double res) {
    json j;
    j["value"] = cjson(value);
    j["vector"] = vjson(v);
    j["residual"] = res;
    return j;
}

double pair_residual(const Mat4& m, cplx value, const Vec4c& v) { return norm(to_complex(m) * v - v * value); }

// ---- commands ----

void cmd_classify(const Request& req, json& out) {
    const MaxwellGen f = generator_of(req);
    const Classification c = classify(f, req.opts.tol);
    const EigenParams ep = eigen_params(f);
    out["class"] = std::string(to_string(c.kind));
    out["d_zero"] = c.d_zero;
    out["h_zero"] = c.h_zero;
    out["sigma"] = ep.sigma;
    out["theta"] = ep.theta;
    out["zeta"] = ep.zeta;
    out["norm2"] = ep.norm2;
}

void cmd_exp(const Request& req, json& out) {
    const MaxwellGen f = generator_of(req);
    out["d"] = vjson(f.d());
    out["h"] = vjson(f.h());
    out["t"] = req.opts.t;
    out["matrix"] = mjson(exp_maxwell(f, req.opts.t));
}

void cmd_eigvecs(const Request& req, json& out) {
    const MaxwellGen f = generator_of(req);
    out["class"] = std::string(to_string(classify(f, req.opts.tol).kind));
    json pairs = json::array();
    for (const auto& p : eigenvectors(f, req.opts.tol))
        pairs.push_back(eigenpair_json(p.value, p.vector, pair_residual(f.matrix(), p.value, p.vector)));
    out["pairs"] = pairs;
}

void cmd_validate(const Request& req, json& out) {
    const LorentzMat l = validate(matrix_of(req), req.opts.tol);
    out["valid"] = true;
    out["proper"] = l.proper();
    out["det"] = l.det();
    out["residual"] = l.residual();
    out["s"] = l.s();
    out["p"] = vjson(l.p());
    out["q"] = vjson(l.q());
    out["A"] = mjson(l.a());
    out["block_residual"] = block_residuals(l).max();
}

void cmd_polar(const Request& req, json& out) {
    const LorentzMat l = validate(matrix_of(req), req.opts.tol);
    const PolarUP up = polar(l, req.opts.tol);
    out["R"] = mjson(up.r);
    out["axis"] = vjson(up.axis);
    out["angle"] = up.angle;
    out["s"] = up.s;
    out["t"] = up.t;
    out["v"] = vjson(up.v);
    out["u"] = vjson(up.u);
    out["U"] = mjson(up.rotation4());
    out["P"] = mjson(up.boost4());
    out["residual"] = norm(up.rotation4() * up.boost4() - l.matrix());
}

void cmd_eigen(const Request& req, json& out) {
    const LorentzMat l = validate(matrix_of(req), req.opts.tol);
    const LorentzEigen e = eigen(l, req.opts.tol);
    out["a"] = e.a_coeff;
    json values = json::array();
    for (const cplx& v : e.values) values.push_back(cjson(v));
    out["values"] = values;
    json pairs = json::array();
    for (std::size_t k = 0; k < e.vectors.size(); ++k)
        pairs.push_back(eigenpair_json(e.vector_values[k], e.vectors[k],
                                       pair_residual(l.matrix(), e.vector_values[k], e.vectors[k])));
    out["pairs"] = pairs;
}

void cmd_spin(const Request& req, json& out) {
    const LorentzMat l = validate(matrix_of(req), req.opts.tol);
    const SpinPair sp = lorentz_to_spin(l, req.opts.tol);
    out["rotation"] = pjson(sp.rotation);
    out["boost"] = pjson(sp.boost);
    out["m"] = pjson(sp.m);
    out["residual"] = norm(jaws(sp.m) - l.matrix());
}

void cmd_log(const Request& req, json& out) {
    const LorentzMat l = validate(matrix_of(req), req.opts.tol);
    MaxwellGen f;
    if (req.opts.oracle == "diag") {
        f = log_diag_oracle(l, req.opts.tol);
        out["method"] = "diag";
    } else {
        const SpinLog sl = spin_log(lorentz_to_spin(l, req.opts.tol).m, req.opts.tol);
        f = lorentz_log(l, req.opts.tol);
        out["method"] = "spin";
        out["branch"] = std::string(to_string(sl.branch));
        out["z0"] = sl.z0 ? cjson(*sl.z0) : json(nullptr);
    }
    const double res = norm(exp_maxwell(f, 1.0) - l.matrix());
    if (res > 1e-8 * std::max(1.0, norm(l.matrix())))
        throw Error(ErrorKind::Numerical, "log: round trip residual too large", res);
    out["d"] = vjson(f.d());
    out["h"] = vjson(f.h());
    out["generator"] = mjson(f.matrix());
    out["residual"] = res;
}

struct Checks {
    json list = json::array();
    bool ok = true;

    void add(const std::string& name, double residual, double limit) {
        json c;
        c["name"] = name;
        c["residual"] = residual;
        c["limit"] = limit;
        c["ok"] = residual <= limit;
        ok = ok && residual <= limit;
        list.push_back(c);
    }
};

void verify_generator(const Request& req, Checks& ck) {
    const MaxwellGen f = generator_of(req);
    const Tolerance& tol = req.opts.tol;
    const double sc = std::max({1.0, norm(f.d()), norm(f.h())});
    const auto lim = [&](double power) { return tol.abs() + tol.rel() * std::pow(sc, power); };
    const Mat4& fm = f.matrix();
    const Mat4 ft = skew_conjugate(f).matrix();
    const Mat4 id = Mat4::identity();
    const double dd = dot(f.d(), f.d()), hh = dot(f.h(), f.h()), p = dot(f.d(), f.h());
    const EigenParams ep = eigen_params(f);

    ck.add("g_skew", norm(g_transpose(fm) + fm), lim(1));
    ck.add("eigen_params", std::max(std::abs(ep.sigma * ep.sigma - ep.theta * ep.theta - (dd - hh)),
                                    std::abs(ep.sigma * ep.theta - p)),
           lim(2));
    ck.add("skew_product", norm(fm * ft - id * p), lim(2));
    ck.add("square_difference", norm(fm * fm - ft * ft - id * (dd - hh)), lim(2));
    ck.add("cube_reduction", norm(fm * fm * fm - fm * (dd - hh) - ft * p), lim(3));
    ck.add("determinant", std::abs(det(fm) + p * p), lim(4));

    const Mat4 e = exp_maxwell(f, req.opts.t);
    const double ne = norm(e);
    ck.add("exp_vs_series", norm(e - series_exp(fm * req.opts.t)), 1e-9 * std::max(1.0, ne));
    ck.add("exp_g_orthogonal", is_g_orthogonal(e, tol).residual, tol.abs() + tol.rel() * ne * ne);
    ck.add("exp_det", std::abs(det(e) - 1.0), tol.abs() + tol.rel() * std::pow(ne, 4));

    double worst = 0.0;
    for (const auto& pr : eigenvectors(f, tol)) worst = std::max(worst, pair_residual(fm, pr.value, pr.vector));
    ck.add("eigenvectors", worst, 1e-10 * std::max(1.0, norm(fm)));
}

void verify_matrix(const Request& req, Checks& ck, json& out) {
    const Tolerance& tol = req.opts.tol;
    const LorentzMat l = validate(matrix_of(req), tol);
    const Mat4& m = l.matrix();
    const double nm = norm(m);
    const double s2 = l.s() * l.s();
    out["proper"] = l.proper();
    ck.add("g_orthogonal", l.residual(), tol.abs() + tol.rel() * nm * nm);
    ck.add("block_relations", block_residuals(l).max(), tol.abs() + tol.rel() * s2);
    if (!l.proper()) return;

    ck.add("det_A_equals_s", std::abs(det(l.a()) - l.s()), tol.abs() + tol.rel() * s2 * l.s());
    const PolarUP up = polar(l, tol);
    ck.add("polar_reassembly", norm(up.rotation4() * up.boost4() - m), tol.abs() + tol.rel() * nm * nm);

    const GramEigen g = gram_eigen(l);
    const Mat4 gram = transpose(m) * m;
    double gres = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
        gres = std::max(gres, norm(gram * g.vectors[k] - g.vectors[k] * g.values[k]));
    ck.add("gram_eigen", gres, tol.abs() + tol.rel() * nm * nm);

    const LorentzEigen e = eigen(l, tol);
    double eres = 0.0;
    for (std::size_t k = 0; k < e.vectors.size(); ++k)
        eres = std::max(eres, pair_residual(m, e.vector_values[k], e.vectors[k]));
    ck.add("eigenvectors", eres, 1e-8 * std::max(1.0, nm));

    const SpinPair sp = lorentz_to_spin(l, tol);
    ck.add("spin_jaws", norm(jaws(sp.m) - m), 1e-8 * std::max(1.0, nm));
    const MaxwellGen f = lorentz_log(l, tol);
    ck.add("log_round_trip", norm(exp_maxwell(f, 1.0) - m), 1e-8 * std::max(1.0, nm));
}

// Returns the exit code; fills out with the response body.
int execute(const Request& req, json& out) {
    out["command"] = req.command;
    out["options"] = options_json(req);
    const std::string& c = req.command;
    if (c == "classify") cmd_classify(req, out);
    else if (c == "exp") cmd_exp(req, out);
    else if (c == "eigvecs") cmd_eigvecs(req, out);
    else if (c == "validate") cmd_validate(req, out);
    else if (c == "polar") cmd_polar(req, out);
    else if (c == "eigen") cmd_eigen(req, out);
    else if (c == "spin") cmd_spin(req, out);
    else if (c == "log") cmd_log(req, out);
    else if (c == "verify") {
        Checks ck;
        if (req.matrix) {
            out["input"] = "matrix";
            verify_matrix(req, ck, out);
        } else {
            out["input"] = "generator";
            verify_generator(req, ck);
        }
        out["checks"] = ck.list;
        out["ok"] = ck.ok;
        return ck.ok ? kOk : kNumerical;
    } else {
        throw InputError("unknown command: " + c);
    }
    return kOk;
}

int exit_code_of(ErrorKind k) { return k == ErrorKind::Numerical ? kNumerical : kRejected; }

json error_json(const std::string& kind, const std::string& message, std::optional<double> residual, int code) {
    json e;
    e["kind"] = kind;
    e["message"] = message;
    if (residual) e["residual"] = *residual;
    json j;
    j["error"] = e;
    j["exit_code"] = code;
    return j;
}

// Runs one request, converting failures into an error object.
int execute_guarded(const Request& req, json& out, json& error) {
    try {
        return execute(req, out);
    } catch (const InputError& e) {
        error = error_json("malformed-input", e.what(), std::nullopt, kMalformed);
        return kMalformed;
    } catch (const Error& e) {
        const int code = exit_code_of(e.kind());
        error = error_json(to_string(e.kind()), e.what(), e.residual(), code);
        return code;
    } catch (const std::exception& e) {
        error = error_json("numerical", e.what(), std::nullopt, kNumerical);
        return kNumerical;
    }
}

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
    const auto is_numeric_array = [](const json& a) {
        return a.is_array() && std::all_of(a.begin(), a.end(), [](const json& x) { return x.is_number(); });
    };
    const auto flat = [](const json& a) {
        std::string s;
        for (const auto& x : a) s += (s.empty() ? "" : " ") + x.dump();
        return s;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (is_numeric_array(j)) {
        os << prefix << ": " << flat(j) << '\n';
    } else if (j.is_array()) {
        bool rows = !j.empty() && std::all_of(j.begin(), j.end(), [&](const json& r) { return is_numeric_array(r); });
        if (rows) {
            os << prefix << ":\n";
            for (const auto& r : j) os << "  " << flat(r) << '\n';
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
        }
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void emit(const json& j, const std::string& format, std::ostream& os) {
    if (format == "text") render_text(j, "", os);
    else os << j.dump(2) << '\n';
}

Request request_from_line(const json& j, const Options& defaults) {
    if (!j.is_object()) throw InputError("batch line must be a JSON object");
    if (!j.contains("command") || !j.at("command").is_string()) throw InputError("batch line needs a \"command\" string");
    Request req;
    req.command = j.at("command").get<std::string>();
    if (std::find(std::begin(kCommands), std::end(kCommands), req.command) == std::end(kCommands))
        throw InputError("unknown command: " + req.command);
    req.opts = defaults;
    req.opts.format = "json";
    absorb_payload(j, req);
    if (j.contains("t")) req.opts.t = number(j.at("t"), "t");
    if (j.contains("oracle")) req.opts.oracle = j.at("oracle").get<std::string>();
    const double abs = j.contains("tol") ? number(j.at("tol"), "tol") : defaults.tol.abs();
    const double rel = j.contains("rel") ? number(j.at("rel"), "rel") : defaults.tol.rel();
    req.opts.tol = make_tolerance(abs, rel);
    return req;
}

int run_batch(const std::string& path, const Options& defaults, std::ostream& out) {
    std::vector<std::string> lines;
    {
        std::istringstream in(read_file(path));
        for (std::string line; std::getline(in, line);)
            if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
    std::vector<std::string> results(lines.size());
    std::vector<int> codes(lines.size(), kOk);
    batch::parallel_for(lines.size(), [&](std::size_t i) {
        json body, error;
        int code;
        try {
            code = execute_guarded(request_from_line(parse_json(lines[i]), defaults), body, error);
        } catch (const InputError& e) {
            error = error_json("malformed-input", e.what(), std::nullopt, kMalformed);
            code = kMalformed;
        }
        if (!error.is_null()) {
            error["line"] = i + 1;
            results[i] = error.dump();
        } else {
            results[i] = body.dump();
        }
        codes[i] = code;
    });
    for (const auto& r : results) out << r << '\n';
    return codes.empty() ? kOk : *std::max_element(codes.begin(), codes.end());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form Lorentz group computations", "lorentz"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(0, 1);

    std::string d_str, h_str, matrix_str, file, batch_file, format = "json", oracle;
    double tol_abs = 0.0, tol_rel = 0.0, t = 1.0;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    auto* tol_opt = app.add_option("--tol", tol_abs, "absolute tolerance (overrides LORENTZ_TOL)");
    auto* rel_opt = app.add_option("--rel", tol_rel, "relative tolerance");
    app.add_option("--d", d_str, "generator vector d as x,y,z");
    app.add_option("--h", h_str, "generator vector h as x,y,z");
    app.add_option("--t", t, "exponential parameter");
    app.add_option("--matrix", matrix_str, "4x4 matrix as inline JSON");
    app.add_option("--file", file, "JSON input file ('-' for stdin)");
    app.add_option("--oracle", oracle, "log: 'diag' selects the diagonalization route")
        ->check(CLI::IsMember({"diag", "spin"}));
    app.add_option("--batch", batch_file, "one JSON request per line");

    const std::pair<const char*, const char*> subs[] = {
        {"classify", "classify a generator and report its eigen-parameters"},
        {"exp", "exponential of a generator at --t"},
        {"eigvecs", "eigenvectors of a generator"},
        {"validate", "check that a matrix is Lorentz and split it into blocks"},
        {"polar", "rotation-times-boost factorization"},
        {"eigen", "eigenvalues and eigenvectors of a Lorentz matrix"},
        {"spin", "SL(2,C) representative of a proper Lorentz matrix"},
        {"log", "generator whose exponential is the given matrix"},
        {"verify", "run the invariant checks on a generator or matrix"},
    };
    for (const auto& [name, desc] : subs) app.add_subcommand(name, desc)->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kMalformed;
    }

    const auto fail = [&](const json& e) {
        if (format == "text") err << "error (" << e["error"]["kind"].get<std::string>() << "): "
                                  << e["error"]["message"].get<std::string>() << '\n';
        else err << e.dump() << '\n';
        return e["exit_code"].get<int>();
    };

    Request req;
    try {
        double abs = Tolerance{}.abs();
        if (const char* env = std::getenv("LORENTZ_TOL"); env && *env) abs = parse_double(env);
        if (tol_opt->count()) abs = tol_abs;
        const double rel = rel_opt->count() ? tol_rel : Tolerance{}.rel();
        req.opts.tol = make_tolerance(abs, rel);
        req.opts.format = format;
        req.opts.t = t;
        req.opts.oracle = oracle == "spin" ? "" : oracle;
        if (!std::isfinite(t)) throw InputError("--t must be finite");

        if (!batch_file.empty()) {
            if (!app.get_subcommands().empty()) throw InputError("--batch takes no subcommand");
            return run_batch(batch_file, req.opts, out);
        }
        if (app.get_subcommands().empty()) {
            out << app.help();
            return kMalformed;
        }
        req.command = app.get_subcommands().front()->get_name();
        if (!file.empty()) absorb_payload(parse_json(read_file(file)), req);
        if (!matrix_str.empty()) req.matrix = mat4_from_json(parse_json(matrix_str));
        if (!d_str.empty()) req.d = parse_triple(d_str);
        if (!h_str.empty()) req.h = parse_triple(h_str);
    } catch (const InputError& e) {
        return fail(error_json("malformed-input", e.what(), std::nullopt, kMalformed));
    }

    json body, error;
    const int code = execute_guarded(req, body, error);
    if (!error.is_null()) return fail(error);
    emit(body, format, out);
    return code;
}

}  // namespace lorentz::cli
