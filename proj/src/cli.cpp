#include "bsk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "bsk/errors.hpp"
#include "bsk/foxchain.hpp"
#include "bsk/invariants.hpp"
#include "bsk/json_io.hpp"

namespace bsk::cli {

namespace {

using io::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Pretty output

std::string scalar_text(const json& v) {
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

bool is_scalar_array(const json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); });
}

void render_pretty(const json& v, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (v.is_object()) {
        // abelian groups collapse to their text form
        if (v.contains("text") && v.contains("free_rank")) {
            out << pad << v["text"].get<std::string>() << '\n';
            return;
        }
        for (const auto& [key, value] : v.items()) {
            if (value.is_primitive()) {
                out << pad << key << ": " << scalar_text(value) << '\n';
            } else if (value.is_object() && value.contains("text") && value.contains("free_rank")) {
                out << pad << key << ": " << value["text"].get<std::string>() << '\n';
            } else if (is_scalar_array(value)) {
                out << pad << key << ": [";
                for (std::size_t i = 0; i < value.size(); ++i)
                    out << (i ? ", " : "") << scalar_text(value[i]);
                out << "]\n";
            } else {
                out << pad << key << ":\n";
                render_pretty(value, out, indent + 1);
            }
        }
        return;
    }
    if (v.is_array()) {
        for (const auto& e : v) {
            if (e.is_primitive()) {
                out << pad << "- " << scalar_text(e) << '\n';
            } else if (is_scalar_array(e)) {
                out << pad << "- [";
                for (std::size_t i = 0; i < e.size(); ++i)
                    out << (i ? ", " : "") << scalar_text(e[i]);
                out << "]\n";
            } else {
                out << pad << "-\n";
                render_pretty(e, out, indent + 1);
            }
        }
        return;
    }
    out << pad << scalar_text(v) << '\n';
}

void render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                  std::ostream& out) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows)
            width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            out << (c ? " | " : "") << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
        out << '\n';
    };
    line(header);
    for (std::size_t c = 0; c < header.size(); ++c)
        out << (c ? "-+-" : "") << std::string(width[c], '-');
    out << '\n';
    for (const auto& r : rows)
        line(r);
}

// ---------------------------------------------------------------------------
// Subcommands

json group_command(GroupParam k, const std::vector<std::string>& words) {
    json j = {{"k", k.value()}};
    json items = json::array();
    BSElement product;
    for (const auto& text : words) {
        FreeWord w = FreeWord::parse(text);
        BSElement g = eval_word(w, k);
        product = multiply(product, g, k);
        BSElement gi = invert(g, k);
        items.push_back({{"word", text},
                         {"reduced_word", w.str()},
                         {"element", io::to_json(g)},
                         {"normal_form", to_string(g, k)},
                         {"inverse", io::to_json(gi)},
                         {"inverse_normal_form", to_string(gi, k)}});
    }
    j["words"] = std::move(items);
    j["product"] = io::to_json(product);
    j["product_normal_form"] = to_string(product, k);
    return j;
}

json ring_command(GroupParam k, const std::string& expr, const std::vector<std::string>& factors) {
    GroupRingElt p = parse_ring(expr, k);
    for (const auto& f : factors)
        p = p * parse_ring(f, k);
    return {{"k", k.value()},
            {"element", io::to_json(p)},
            {"human", to_string(p)},
            {"involute", to_string(involute(p))},
            {"augmentation", io::to_json(augment(p))},
            {"identity_coefficient", io::to_json(identity_coefficient(p))},
            {"mod2", to_string(reduce_mod2(p))}};
}

json fox_command(GroupParam k, const std::optional<std::string>& word) {
    json j = {{"k", k.value()}};
    if (word) {
        FreeWord w = FreeWord::parse(*word);
        FreeRingElt da = fox_derivative(w, Generator::a);
        FreeRingElt db = fox_derivative(w, Generator::b);
        j["word"] = w.str();
        j["d_a"] = to_string(da);
        j["d_b"] = to_string(db);
        j["projected"] = {{"d_a", to_string(project(da, k))}, {"d_b", to_string(project(db, k))}};
        return j;
    }
    FoxComplex cx = build_complex(k);
    if (k.collapses_b()) {
        j["complex"] = "circle: 0 -> L --(1 - a)--> L -> Z -> 0";
    } else {
        FreeWord r = FreeWord::relator(k);
        j["relator"] = r.str();
        j["d_a"] = to_string(fox_derivative(r, Generator::a));
        j["d_b"] = to_string(fox_derivative(r, Generator::b));
    }
    json d2 = json::array(), d1 = json::array();
    for (std::size_t c = 0; c < cx.d2.cols() && cx.d2.rows() > 0; ++c)
        d2.push_back(to_string(cx.d2(0, c)));
    for (std::size_t r = 0; r < cx.d1.rows(); ++r)
        d1.push_back(to_string(cx.d1(r, 0)));
    j["d2"] = std::move(d2);
    j["d1"] = std::move(d1);
    j["d2_json"] = io::matrix_rows_to_json(cx.d2);
    j["d1_json"] = io::matrix_rows_to_json(cx.d1);
    TrivialComplex t = tensor_trivial(cx, 0);
    j["augmented"] = {{"d2", io::to_json(t.d2)}, {"d1", io::to_json(t.d1)}};
    j["chain_condition"] = (cx.d2 * cx.d1).is_zero();
    return j;
}

json homology_section(GroupParam k, Coefficients c) {
    std::vector<AbelianGroup> computed = homology_from_complex(k, c);
    json rows = json::array();
    for (int d = 0; d <= 2; ++d) {
        AbelianGroup closed = homology_closed_form(k, c, d);
        rows.push_back({{"degree", d},
                        {"closed_form", io::to_json(closed)},
                        {"chain_complex", io::to_json(computed[static_cast<std::size_t>(d)])},
                        {"agree", closed == computed[static_cast<std::size_t>(d)]}});
    }
    return rows;
}

json homology_command(GroupParam k) {
    return {{"k", k.value()}, {"Z", homology_section(k, Coefficients::Z)}, {"Z2", homology_section(k, Coefficients::Z2)}};
}

json lgroups_command(GroupParam k) {
    AssemblyReport a = assembly_status(k);
    return {{"k", k.value()},
            {"table", io::to_json(lgroup_table(k))},
            {"assembly",
             {{"A4_domain", io::to_json(a.a4_domain)},
              {"A5_domain", io::to_json(a.a5_domain)},
              {"A4_matches_L4", a.a4_matches()},
              {"A5_matches_L5", a.a5_matches()},
              {"properties_hold", a.a4_matches() && a.a5_matches()}}},
            {"radical", radical_description(k).text}};
}

json bordism_command(GroupParam k, const std::string& w2) {
    StableBordism b = stable_bordism_group(k, parse_w2(w2));
    return {{"k", k.value()},
            {"w2", w2},
            {"group", b.str()},
            {"signature_divisor", io::to_json(b.signature_divisor)},
            {"h2_mod2", io::to_json(b.h2_mod2)}};
}

json form_command(const std::string& path) {
    HermitianForm given = io::form_from_json(read_json_file(path));
    HermitianForm f = given.with_found_inverse();
    std::string source = given.inverse() ? "supplied" : (f.inverse() ? "found" : "none");
    json j = {{"k", f.param().value()},
              {"rank", f.rank()},
              {"parity", parity(f) == FormParity::Odd ? "odd" : "even"},
              {"augmented", io::to_json(augment_form(f))},
              {"signature", form_signature(f)},
              {"certified_nonsingular", f.certified_nonsingular()},
              {"inverse_source", source},
              {"form", io::to_json(f)}};
    j["arf"] = f.arf() ? io::to_json(*f.arf()) : json(nullptr);
    return j;
}

json classify_command(const std::string& p1, const std::string& p2, const std::optional<std::string>& iso) {
    ManifoldDescriptor d1 = io::descriptor_from_json(read_json_file(p1));
    ManifoldDescriptor d2 = io::descriptor_from_json(read_json_file(p2));
    std::optional<RingMatrix> u, u_inverse;
    if (iso) {
        json j = read_json_file(*iso);
        u = io::ring_matrix_from_json(j);
        if (j.contains("inverse") && !j["inverse"].is_null())
            u_inverse = io::matrix_rows_from_json(j["inverse"], u->param());
    }
    return io::to_json(classify(d1, d2, u, u_inverse));
}

json realize_command(const std::string& path) {
    HermitianForm f = io::form_from_json(read_json_file(path));
    std::vector<RealizedClass> classes = realize(f);
    json list = json::array();
    for (const auto& c : classes)
        list.push_back(io::to_json(c));
    return {{"k", f.param().value()},
            {"parity", parity(f) == FormParity::Odd ? "odd" : "even"},
            {"signature", form_signature(f)},
            {"count", classes.size()},
            {"classes", std::move(list)}};
}

json report_row(std::int64_t kv) {
    GroupParam k(kv);
    std::vector<AbelianGroup> hz = homology_from_complex(k, Coefficients::Z);
    std::vector<AbelianGroup> h2 = homology_from_complex(k, Coefficients::Z2);
    bool oracle = true;
    for (int d = 0; d <= 2; ++d) {
        auto i = static_cast<std::size_t>(d);
        oracle = oracle && hz[i] == homology_closed_form(k, Coefficients::Z, d) &&
                 h2[i] == homology_closed_form(k, Coefficients::Z2, d);
    }
    LGroupTable l = lgroup_table(k);
    AssemblyReport a = assembly_status(k);
    return {{"k", kv},
            {"H0", hz[0].str()},
            {"H1", hz[1].str()},
            {"H2", hz[2].str()},
            {"H2_Z2", homology_closed_form(k, Coefficients::Z2, 2).str()},
            {"Wh", l.whitehead.str()},
            {"L4", l.L4.str()},
            {"L5", l.L5.str()},
            {"Omega4", stable_bordism_group(k, W2Type::II).str()},
            {"oracle_check", oracle && a.a4_matches() && a.a5_matches() ? "ok" : "FAIL"}};
}

json report_command(const std::string& range) {
    auto dots = range.find("..");
    if (dots == std::string::npos)
        throw SchemaError("--k-range must look like a..b");
    std::int64_t lo = 0, hi = 0;
    try {
        std::size_t used = 0;
        lo = std::stoll(range.substr(0, dots), &used);
        if (used != dots)
            throw SchemaError("bad lower bound");
        std::string rest = range.substr(dots + 2);
        hi = std::stoll(rest, &used);
        if (used != rest.size())
            throw SchemaError("bad upper bound");
    } catch (const std::logic_error&) {
        throw SchemaError("--k-range must look like a..b with integer bounds");
    }
    std::int64_t span = 0;
    if (hi >= lo && (__builtin_sub_overflow(hi, lo, &span) || span > 10000))
        throw SchemaError("--k-range spans more than 10000 values");
    const std::size_t n = hi >= lo ? static_cast<std::size_t>(span) + 1 : 0;
    std::vector<json> rows(n);
    const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += workers)
                rows[i] = report_row(lo + static_cast<std::int64_t>(i));
        }));
    for (auto& j : jobs)
        j.get();
    return {{"range", range}, {"rows", json(std::move(rows))}};
}

void print_report_pretty(const json& report, std::ostream& out) {
    const std::vector<std::string> cols = {"k", "H0", "H1", "H2", "H2_Z2", "Wh", "L4", "L5", "Omega4", "oracle_check"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : report["rows"]) {
        std::vector<std::string> cells;
        for (const auto& c : cols)
            cells.push_back(scalar_text(r[c]));
        rows.push_back(std::move(cells));
    }
    render_table(cols, rows, out);
}

void print_homology_pretty(const json& h, std::ostream& out) {
    for (const char* section : {"Z", "Z2"}) {
        out << "coefficients " << section << " (k = " << h["k"].get<std::int64_t>() << ")\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : h[section])
            rows.push_back({std::to_string(r["degree"].get<int>()), r["closed_form"]["text"].get<std::string>(),
                            r["chain_complex"]["text"].get<std::string>(), r["agree"].get<bool>() ? "yes" : "NO"});
        render_table({"degree", "closed form", "chain complex", "agree"}, rows, out);
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of 4-manifolds with Baumslag-Solitar fundamental group B(k) = <a, b | aba^-1 = b^k>",
                 "bsk"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable tables instead of JSON");

    std::int64_t k = 0;
    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", k, "Baumslag-Solitar parameter")->required(); };

    std::vector<std::string> words;
    auto* group = app.add_subcommand("group", "Normal forms of words in B(k)");
    add_k(group);
    group->add_option("--word", words, "Word over a, A, b, B (A = a^-1, B = b^-1); repeat to multiply")->required();

    std::string expr;
    std::vector<std::string> factors;
    auto* ring = app.add_subcommand("ring", "Arithmetic in Z[B(k)]");
    add_k(ring);
    ring->add_option("--expr", expr, "Element such as \"1 - a + 2*b*A\"")->required();
    ring->add_option("--times", factors, "Right factors to multiply by");

    std::optional<std::string> fox_word;
    auto* fox = app.add_subcommand("fox", "Fox derivatives and the chain complex of B(k)");
    add_k(fox);
    fox->add_option("--word", fox_word, "Differentiate this word instead of the relator");

    auto* homology = app.add_subcommand("homology", "H_0..H_2 of B(k), closed form vs. chain complex");
    add_k(homology);

    auto* lgroups = app.add_subcommand("lgroups", "L-groups, Whitehead group and assembly of B(k)");
    add_k(lgroups);

    std::string w2;
    auto* bordism = app.add_subcommand("bordism", "Stable bordism group of a type II/III normal 1-type");
    add_k(bordism);
    bordism->add_option("--w2", w2, "II or III")->required();

    std::string form_path;
    auto* form = app.add_subcommand("form", "Invariants of a hermitian form (Form JSON)");
    form->add_option("file", form_path, "Form JSON")->required();

    std::string m1, m2;
    std::optional<std::string> iso;
    auto* classify_cmd = app.add_subcommand("classify", "Homeomorphism verdict for two descriptors");
    classify_cmd->add_option("first", m1, "Descriptor JSON")->required();
    classify_cmd->add_option("second", m2, "Descriptor JSON")->required();
    classify_cmd->add_option("--isometry", iso, "Isometry matrix JSON {k, matrix, inverse?}");

    std::string realize_path;
    auto* realize_cmd = app.add_subcommand("realize", "Manifolds realizing a nonsingular form");
    realize_cmd->add_option("file", realize_path, "Form JSON")->required();

    std::string range;
    auto* report = app.add_subcommand("report", "Per-k table of homology, L-groups and bordism");
    report->add_option("--k-range", range, "Range a..b")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return usage;
    }

    try {
        json result;
        GroupParam param(k);
        if (group->parsed())
            result = group_command(param, words);
        else if (ring->parsed())
            result = ring_command(param, expr, factors);
        else if (fox->parsed())
            result = fox_command(param, fox_word);
        else if (homology->parsed())
            result = homology_command(param);
        else if (lgroups->parsed())
            result = lgroups_command(param);
        else if (bordism->parsed())
            result = bordism_command(param, w2);
        else if (form->parsed())
            result = form_command(form_path);
        else if (classify_cmd->parsed())
            result = classify_command(m1, m2, iso);
        else if (realize_cmd->parsed())
            result = realize_command(realize_path);
        else if (report->parsed())
            result = report_command(range);

        if (!pretty)
            out << result.dump(2) << '\n';
        else if (report->parsed())
            print_report_pretty(result, out);
        else if (homology->parsed())
            print_homology_pretty(result, out);
        else
            render_pretty(result, out, 0);
        return ok;
    } catch (const InconsistentError& e) {
        err << "inconsistent: " << e.what() << '\n';
        return inconsistent;
    } catch (const SchemaError& e) {
        err << "invalid input: " << e.what() << '\n';
    } catch (const ParameterError& e) {
        err << "invalid parameter: " << e.what() << '\n';
    } catch (const PreconditionError& e) {
        err << "invalid input: " << e.what() << '\n';
    } catch (const CertificateError& e) {
        err << "certificate error: " << e.what() << '\n';
    } catch (const std::overflow_error& e) {
        err << "invalid input: " << e.what() << '\n';
    }
    return invalid_input;
}

} // namespace bsk::cli
