// ellipcp: exact calculator for rational equivariant elliptic cohomology of
// complex projective spaces and representation spheres, with brute-force
// oracle and cell-model subcommands.
//
// Exit codes: 0 success, 2 parse/usage error, 3 precondition violation,
// 4 oracle mismatch (an implementation bug), 5 enumeration guard exceeded.

#include "ellipcp/ellipcp.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <unistd.h>
#include <vector>

namespace {

using namespace ellipcp;

constexpr Int kOracleDetGuard = 12;    // oracle intersect subcommand
constexpr Int kVerifyDetGuard = 64;    // --verify reruns, D^4 enumeration
constexpr Int kTorsionGuard = 100;
constexpr Int kSubgroupOrderGuard = 10'000;

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool color_enabled() {
    const char* env = std::getenv("ELLIPCP_COLOR");
    if (env != nullptr && std::string_view(env) == "never") return false;
    return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string& text, const char* code) {
    if (!color_enabled()) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}
std::string green(const std::string& t) { return paint(t, "32"); }
std::string red(const std::string& t) { return paint(t, "31"); }

// "l,m" -> Character
Character parse_character_arg(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw parse_error("expected 'lambda,mu'", 0);
    try {
        return Character{std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw parse_error("expected integer pair 'lambda,mu'", 0);
    }
}

Rational parse_rational_arg(const std::string& text, std::size_t offset) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw parse_error("expected rational 'a/n'", offset);
    } catch (const std::out_of_range&) {
        throw parse_error("rational out of range", offset);
    }
}

// "a/n,b/m" -> TorsionPoint
TorsionPoint parse_point_arg(const std::string& text, std::size_t offset = 0) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw parse_error("expected point 'a/n,b/m'", offset);
    return TorsionPoint(parse_rational_arg(text.substr(0, comma), offset),
                        parse_rational_arg(text.substr(comma + 1), offset + comma + 1));
}

// "trivial" | "N,cyclic" | generators joined by '+', e.g. "1/2,0+0,1/2"
FiniteSubgroup parse_subgroup_spec(const std::string& spec) {
    if (spec == "trivial" || spec.empty()) return FiniteSubgroup();
    if (auto comma = spec.find(",cyclic"); comma != std::string::npos) {
        Int n = 0;
        try {
            n = std::stoll(spec.substr(0, comma));
        } catch (const std::exception&) {
            throw parse_error("expected 'N,cyclic'", 0);
        }
        if (n < 1) throw parse_error("cyclic order must be >= 1", 0);
        return FiniteSubgroup::cyclic(n);
    }
    std::vector<TorsionPoint> gens;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        auto next = spec.find('+', pos);
        auto piece = spec.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        gens.push_back(parse_point_arg(piece, pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return FiniteSubgroup::from_generators(gens);
}

std::vector<FiniteSubgroup> parse_family(const std::string& text) {
    std::vector<FiniteSubgroup> family;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find(';', pos);
        auto piece = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        family.push_back(parse_subgroup_spec(piece));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return family;
}

std::string graded_str(const GradedDims& g) {
    return "even " + std::to_string(g.even) + ", odd " + std::to_string(g.odd);
}

void print_divisor_facts(const Report& r) {
    std::cout << "divisor:   " << r.divisor.str() << "\n";
    std::cout << "D.D = " << r.self_intersection << "   chi = " << r.euler_characteristic
              << "   ample: " << (r.ample ? green("yes") : "no") << "\n";
    std::cout << "H*(X,O(-D)) = " << r.coh_minus.str() << "\n";
    std::cout << "H*(X,O_X)   = " << r.coh_structure.str() << "\n";
}

void print_oracle_checks(const Report& r) {
    for (const auto& c : r.oracle_checks) {
        std::cout << "oracle: C" << c.v.str() << ".C" << c.w.str() << "  count " << c.count
                  << "  det^2 " << c.det_squared << "  "
                  << (c.ok ? green("ok") : red("MISMATCH")) << "\n";
    }
}

void check_verify_guard(const Divisor& d) {
    std::vector<Character> dirs;
    for (const auto& [v, m] : d.coefficients()) dirs.push_back(v);
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            if (std::abs(det2(dirs[i], dirs[j])) > kVerifyDetGuard)
                throw GuardExceeded("--verify enumeration bounded to |det| <= " +
                                    std::to_string(kVerifyDetGuard));
}

int require_oracle_ok(const Report& r) {
    for (const auto& c : r.oracle_checks)
        if (!c.ok) {
            std::cerr << "oracle mismatch at C" << c.v.str() << ".C" << c.w.str()
                      << ": this is an implementation bug\n";
            return 4;
        }
    return 0;
}

int run_cp(const std::string& rep_text, bool json, bool unreduced, bool verify) {
    if (verify) check_verify_guard(divisor_of_rep(tensor_with_w(parse_circle_rep(rep_text))));
    Report r = make_cp_report(rep_text, verify);
    if (json) {
        std::cout << to_json(r).dump(2) << "\n";
        return require_oracle_ok(r);
    }
    std::cout << "input:     " << r.input << "\n";
    print_divisor_facts(r);
    for (int k = 0; k < 3; ++k) {
        const auto& row = r.les->degree[static_cast<std::size_t>(k)];
        std::cout << (k == 0 ? "LES  " : "     ") << "k=" << k << ": source " << row.source
                  << " target " << row.target << " rank " << row.rank << " kernel " << row.kernel
                  << " cokernel " << row.cokernel << "\n";
    }
    if (unreduced)
        std::cout << "unreduced: " << graded_str(*r.unreduced) << "   (S^0 correction (1,1))\n";
    std::cout << "reduced:   " << graded_str(*r.reduced) << "\n";
    std::cout << "derivation: D = " << r.divisor.str() << " -> D.D = " << r.self_intersection
              << " -> d = " << *r.d_value << " -> reduced (even, odd) = ("
              << r.reduced->even << ", " << r.reduced->odd << ")\n";
    print_oracle_checks(r);
    return require_oracle_ok(r);
}

int run_sphere(const std::string& rep_text, bool json, bool verify) {
    if (verify) check_verify_guard(divisor_of_rep(parse_torus_rep(rep_text)));
    Report r = make_sphere_report(rep_text, verify);
    if (json) {
        std::cout << to_json(r).dump(2) << "\n";
        return require_oracle_ok(r);
    }
    std::cout << "input:     " << r.input << "\n";
    print_divisor_facts(r);
    std::cout << "EC(S^W):   " << graded_str(*r.sphere_value) << "\n";
    print_oracle_checks(r);
    return require_oracle_ok(r);
}

int run_oracle_intersect(const std::string& v1_text, const std::string& v2_text, bool json) {
    Character v1 = parse_character_arg(v1_text);
    Character v2 = parse_character_arg(v2_text);
    if (content(v1) != 1 || content(v2) != 1)
        throw std::invalid_argument("oracle intersect needs primitive directions");
    Int det = det2(v1, v2);
    if (det == 0) throw std::invalid_argument("parallel curves meet in infinitely many points");
    if (std::abs(det) > kOracleDetGuard)
        throw GuardExceeded("|det| <= " + std::to_string(kOracleDetGuard) + " for the oracle");
    Int count = intersection_count_oracle(v1, v2);
    bool ok = count == det * det;
    if (json) {
        nlohmann::json j{{"schema", kJsonSchema}, {"command", "oracle.intersect"},
                         {"v1", to_json(v1)},     {"v2", to_json(v2)},
                         {"det", det},            {"count", count},
                         {"det_squared", det * det}, {"ok", ok}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "v1 = " << v1.str() << "  v2 = " << v2.str() << "  det = " << det << "\n";
        std::cout << "enumerated intersection count = " << count << "\n";
        std::cout << "det^2                         = " << det * det << "\n";
        std::cout << "agreement: " << (ok ? green("yes") : red("NO")) << "\n";
    }
    return ok ? 0 : 4;
}

int run_oracle_torsion(Int n, bool json) {
    if (n < 1) throw std::invalid_argument("torsion level must be >= 1");
    if (n > kTorsionGuard)
        throw GuardExceeded("n <= " + std::to_string(kTorsionGuard) + " for torsion enumeration");
    Int total = static_cast<Int>(torsion_points(n).size());
    Int exact = exact_order_count(n);
    // closed form n^2 prod_{p|n} (1 - p^-2), printed next to the enumeration
    Int closed = n * n;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        closed = closed / (p * p) * (p * p - 1);
    }
    if (m > 1) closed = closed / (m * m) * (m * m - 1);
    if (json) {
        nlohmann::json j{{"schema", kJsonSchema}, {"command", "oracle.torsion"}, {"n", n},
                         {"full_torsion", total}, {"exact_order", exact},
                         {"jordan_totient", closed}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "|E[" << n << "]| = " << total << " (expected " << n * n << ")\n";
        std::cout << "exact order " << n << " count = " << exact << " (Jordan J2 = " << closed
                  << ")\n";
    }
    return exact == closed ? 0 : 4;
}

int run_oracle_subgroups(const std::string& spec, bool json) {
    FiniteSubgroup f = parse_subgroup_spec(spec);
    if (f.order() > kSubgroupOrderGuard)
        throw GuardExceeded("subgroup order bounded to " + std::to_string(kSubgroupOrderGuard));
    auto subs = enumerate_subgroups(f);
    if (json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& s : subs)
            list.push_back(nlohmann::json{{"order", s.order()},
                                          {"membership", {s.m00(), s.m01(), 0, s.m11()}}});
        nlohmann::json j{{"schema", kJsonSchema},
                         {"command", "oracle.subgroups"},
                         {"group", spec},
                         {"order", f.order()},
                         {"count", static_cast<Int>(subs.size())},
                         {"subgroups", list}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "group of order " << f.order() << ": " << subs.size() << " subgroups\n";
        for (const auto& s : subs) std::cout << "  order " << s.order() << ": " << s.str() << "\n";
    }
    return 0;
}

nlohmann::json cell_entry_json(const CellEntry& e) {
    const char* kind = "zero";
    switch (e.kind) {
        case CellEntryKind::zero: kind = "zero"; break;
        case CellEntryKind::suspended_q: kind = "suspended_q"; break;
        case CellEntryKind::suspended_q_power: kind = "suspended_q_power"; break;
        case CellEntryKind::suspended_poly_ring: kind = "suspended_poly_ring"; break;
    }
    nlohmann::json j{{"kind", kind}, {"describe", e.describe()}};
    if (e.kind != CellEntryKind::zero) j["shift"] = e.shift;
    if (e.kind == CellEntryKind::suspended_q_power) j["rank"] = e.count;
    if (!e.detail.empty()) j["form"] = e.detail;
    return j;
}

void print_cell_table(const CellModelTable& t) {
    std::cout << "G:            " << t.top.describe() << "\n";
    if (t.direction)
        std::cout << "H_" << t.direction->str() << ":     " << t.at_direction.describe() << "\n";
    std::cout << "other H_w:    " << t.other_codim1.describe() << "\n";
    for (const auto& [f, e] : t.bottom)
        std::cout << "bottom, F = " << f.str() << ": " << e.describe() << "\n";
}

nlohmann::json cell_table_json(const CellModelTable& t, const std::string& command) {
    nlohmann::json bottom = nlohmann::json::array();
    for (const auto& [f, e] : t.bottom)
        bottom.push_back(nlohmann::json{{"order", f.order()},
                                        {"membership", {f.m00(), f.m01(), 0, f.m11()}},
                                        {"entry", cell_entry_json(e)}});
    nlohmann::json j{{"schema", kJsonSchema},
                     {"command", command},
                     {"top", cell_entry_json(t.top)},
                     {"other_codim1", cell_entry_json(t.other_codim1)},
                     {"bottom", bottom}};
    if (t.direction) {
        j["direction"] = to_json(*t.direction);
        j["at_direction"] = cell_entry_json(t.at_direction);
    }
    return j;
}

int run_cell_codim1(const std::string& dir_text, const std::string& family_text, bool json) {
    Character v = parse_character_arg(dir_text);
    if (!is_canonical_primitive(v)) {
        v = canonical_sign(v);
        if (!is_canonical_primitive(v))
            throw parse_error("direction must be primitive (coprime exponents)", 0);
    }
    auto family = parse_family(family_text);
    CellModelTable t = cell_model_codim1(v, family);
    if (json)
        std::cout << cell_table_json(t, "cell.codim1").dump(2) << "\n";
    else
        print_cell_table(t);
    return 0;
}

int run_cell_finite(const std::string& spec, bool json) {
    FiniteSubgroup f = parse_subgroup_spec(spec);
    if (f.order() > kSubgroupOrderGuard)
        throw GuardExceeded("subgroup order bounded to " + std::to_string(kSubgroupOrderGuard));
    CellModelTable t = cell_model_finite(f);
    if (json)
        std::cout << cell_table_json(t, "cell.finite").dump(2) << "\n";
    else
        print_cell_table(t);
    return 0;
}

int run_euler(const std::string& rep_text, const std::string& minus_text,
              const std::string& subgroup_spec, bool json) {
    TorusRep w = parse_torus_rep(rep_text);
    FiniteSubgroup f = parse_subgroup_spec(subgroup_spec);
    if (f.order() > kSubgroupOrderGuard)
        throw GuardExceeded("subgroup order bounded to " + std::to_string(kSubgroupOrderGuard));
    Splitting s = decompose(f);
    if (minus_text.empty()) {
        EulerPolynomial e = euler_class(w, f);
        if (json) {
            nlohmann::json j{{"schema", kJsonSchema}, {"command", "euler"},
                             {"splitting", s.str()},  {"value", e.str()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "splitting: " << s.str() << "\n";
            std::cout << "e(W)_F = " << e.str() << "\n";
        }
        return 0;
    }
    auto [num, den] = euler_class_virtual(w, parse_torus_rep(minus_text), f);
    if (json) {
        nlohmann::json j{{"schema", kJsonSchema}, {"command", "euler"},
                         {"splitting", s.str()},  {"numerator", num.str()},
                         {"denominator", den.str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "splitting: " << s.str() << "\n";
        std::cout << "e(W0 - W1)_F = (" << num.str() << ") / (" << den.str() << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ellipcp: exact equivariant elliptic cohomology of projective spaces "
        "and representation spheres"};
    app.require_subcommand(1);

    std::string rep_text, rep2_text, family_text = "trivial", subgroup_spec, minus_text;
    Int torsion_n = 1;
    bool json = false, unreduced = false, verify = false;

    auto* cp = app.add_subcommand("cp", "value on the projective space of a circle representation");
    cp->add_option("rep", rep_text, "circle representation, e.g. \"eps + 4z\"")->required();
    cp->add_flag("--json", json, "machine-readable report");
    cp->add_flag("--unreduced", unreduced, "also print the unreduced value");
    cp->add_flag("--verify", verify, "re-derive intersection numbers by enumeration");

    auto* sphere = app.add_subcommand("sphere", "value on a torus representation sphere");
    sphere->add_option("rep", rep2_text, "torus representation, e.g. \"x^0y^1 + 4x^1y^1\"")
        ->required();
    sphere->add_flag("--json", json, "machine-readable report");
    sphere->add_flag("--verify", verify, "re-derive intersection numbers by enumeration");

    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration checks");
    oracle->require_subcommand(1);
    std::string v1_text, v2_text, subgroups_spec;
    auto* intersect = oracle->add_subcommand("intersect", "count curve intersections on E x E");
    intersect->add_option("v1", v1_text, "first direction 'lambda,mu'")->required();
    intersect->add_option("v2", v2_text, "second direction 'lambda,mu'")->required();
    intersect->add_flag("--json", json);
    auto* torsion = oracle->add_subcommand("torsion", "torsion point counts on E");
    torsion->add_option("n", torsion_n, "torsion level")->required();
    torsion->add_flag("--json", json);
    auto* subgroups = oracle->add_subcommand("subgroups", "enumerate subgroups");
    subgroups->add_option("group", subgroups_spec, "'N,cyclic' or generators 'a/n,b/m+...'")
        ->required();
    subgroups->add_flag("--json", json);

    auto* cell = app.add_subcommand("cell", "algebraic cell models of natural cells");
    cell->require_subcommand(1);
    std::string dir_text, finite_spec;
    auto* codim1 = cell->add_subcommand("codim1", "model of G/H for H = ker z_v");
    codim1->add_option("direction", dir_text, "direction 'lambda,mu'")->required();
    codim1->add_option("--family", family_text, "working family, subgroups joined by ';'");
    codim1->add_flag("--json", json);
    auto* finite = cell->add_subcommand("finite", "model of G/F for finite F");
    finite->add_option("subgroup", finite_spec, "'trivial', 'N,cyclic' or generators")->required();
    finite->add_flag("--json", json);

    auto* euler = app.add_subcommand("euler", "Euler class of a representation at a subgroup");
    euler->add_option("rep", rep2_text, "torus representation")->required();
    euler->add_option("--subgroup", subgroup_spec, "'trivial', 'N,cyclic' or generators")
        ->required();
    euler->add_option("--minus", minus_text, "denominator representation (virtual class)");
    euler->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cp->parsed()) return run_cp(rep_text, json, unreduced, verify);
        if (sphere->parsed()) return run_sphere(rep2_text, json, verify);
        if (intersect->parsed()) return run_oracle_intersect(v1_text, v2_text, json);
        if (torsion->parsed()) return run_oracle_torsion(torsion_n, json);
        if (subgroups->parsed()) return run_oracle_subgroups(subgroups_spec, json);
        if (codim1->parsed()) return run_cell_codim1(dir_text, family_text, json);
        if (finite->parsed()) return run_cell_finite(finite_spec, json);
        if (euler->parsed()) return run_euler(rep2_text, minus_text, subgroup_spec, json);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 5;
    } catch (const OracleMismatch& e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
