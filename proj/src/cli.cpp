#include "repstab/cli.hpp"

#include "repstab/dkconfig.hpp"
#include "repstab/store.hpp"
#include "repstab/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace repstab::cli {

namespace {

using store::Json;

enum class Format { md, csv, json };

struct Globals {
    std::string format = "md";
    std::string cache_dir;
    bool verbose = false;
};

class Logger {
public:
    Logger(std::ostream& err, const bool& verbose) : err_(err), verbose_(verbose), start_(std::chrono::steady_clock::now()) {}
    void operator()(const std::string& message) const {
        if (!verbose_) return;
        const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        err_ << "[" << std::fixed << std::setprecision(3) << t << "s] " << message << "\n";
    }

private:
    std::ostream& err_;
    const bool& verbose_;
    std::chrono::steady_clock::time_point start_;
};

/// Rows of strings rendered as a Markdown or CSV table.
struct TextTable {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    std::string markdown() const {
        std::ostringstream out;
        auto line = [&](const std::vector<std::string>& cells) {
            out << "|";
            for (const auto& c : cells) out << " " << c << " |";
            out << "\n";
        };
        line(headers);
        out << "|";
        for (std::size_t i = 0; i < headers.size(); ++i) out << " --- |";
        out << "\n";
        for (const auto& r : rows) line(r);
        return out.str();
    }

    std::string csv() const {
        std::ostringstream out;
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out << ",";
                const auto& c = cells[i];
                if (c.find_first_of(",\"\n") == std::string::npos) {
                    out << c;
                } else {
                    out << '"';
                    for (char ch : c) out << (ch == '"' ? std::string("\"\"") : std::string(1, ch));
                    out << '"';
                }
            }
            out << "\n";
        };
        line(headers);
        for (const auto& r : rows) line(r);
        return out.str();
    }

    std::string render(Format f) const { return f == Format::csv ? csv() : markdown(); }
};

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    return Format::md;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ScaleExceeded:
        case ErrorCode::RankTooLarge: return exit_scale;
        case ErrorCode::InvalidArgument:
        case ErrorCode::InvalidPartition: return exit_usage;
        case ErrorCode::VerificationFailed: return exit_assertion;
        default: return exit_input;
    }
}

std::string padded_label(const Partition& lambda) {
    const Partition tail = lambda.unpadded();
    if (tail.empty()) return "V(0)";
    return "V" + tail.to_string();
}

/// V(0) + V(1) + 2*V(1,1): the level-n decomposition in padded notation.
std::string padded_string(const SymRep& rep) {
    if (rep.empty()) return "0";
    std::string out;
    for (const auto& [lambda, count] : rep.multiplicities()) {
        if (!out.empty()) out += " + ";
        if (count != 1) out += count.get_str() + "*";
        out += padded_label(lambda);
    }
    return out;
}

std::string generators_string(const GeneratorMultiset& gens) {
    if (gens.empty()) return "0";
    std::string out;
    for (const auto& [lambda, count] : gens) {
        if (!out.empty()) out += " + ";
        if (count != 1) out += count.get_str() + "*";
        out += "M" + lambda.to_string();
    }
    return out;
}

std::string binomial_text(const DimensionPolynomial& poly) {
    std::string text = poly.to_string();
    for (std::size_t at = text.find("C(n,"); at != std::string::npos; at = text.find("C(n,", at)) text.replace(at, 4, "C(k,");
    return text;
}

std::string opt_string(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

Json generators_json(const GeneratorMultiset& gens) {
    Json out = Json::array();
    for (const auto& [lambda, count] : gens) out.push_back({{"label", store::to_json(lambda)}, {"multiplicity", store::to_json(count)}});
    return out;
}

/// Accepts a sealed envelope of the expected kind, or a bare payload object.
Json load_payload(const std::string& path, const std::string& kind) {
    const std::string text = store::read_file(path);
    Json probe;
    try {
        probe = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    if (probe.is_object() && probe.contains("schema_version")) return store::unseal(text, kind);
    return probe;
}

FIModuleTable load_table(const std::string& path) { return store::fimod_from_json(load_payload(path, "fimod-table")); }

void write_output_file(const std::string& path, const std::string& text, const Logger& log) {
    store::write_file_atomic(path, text + "\n");
    log("wrote " + path);
}

TextTable levels_table(const FIModuleTable& table) {
    TextTable t{{"k", "decomposition", "irreducibles", "dimension"}, {}};
    for (int k = 0; k <= table.max_n(); ++k) {
        const auto& level = table.level(k);
        t.rows.push_back({std::to_string(k), padded_string(level), to_string(level), level.dimension().get_str()});
    }
    return t;
}

// --- subcommands -----------------------------------------------------------

int cmd_chartab(int n, const std::string& in, const std::string& out_path, Format f, std::ostream& out, const Logger& log) {
    CharacterTable table;
    if (!in.empty()) {
        table = store::chartab_from_json(load_payload(in, "chartab"));
        log("read table for n = " + std::to_string(table.n));
    } else {
        if (n < 0) throw Error(ErrorCode::InvalidArgument, "--n must be non-negative");
        if (n > max_rank()) throw Error(ErrorCode::RankTooLarge, "n = " + std::to_string(n) + " exceeds the maximum rank " + std::to_string(max_rank()));
        log("computing character table for n = " + std::to_string(n));
        table = *character_table(n);
    }
    const std::string sealed = store::encode(table);
    if (!out_path.empty()) write_output_file(out_path, sealed, log);
    if (f == Format::json) {
        out << sealed << "\n";
        return exit_ok;
    }
    const auto& classes = conjugacy_classes(table.n);
    TextTable t;
    t.headers.push_back("lambda \\ mu");
    for (const auto& c : classes.classes) t.headers.push_back(c.cycle_type.to_string());
    std::vector<std::string> sizes{"class size"};
    for (const auto& c : classes.classes) sizes.push_back(c.size.get_str());
    t.rows.push_back(sizes);
    for (std::size_t r = 0; r < table.labels.size(); ++r) {
        std::vector<std::string> row{table.labels[r].to_string()};
        for (const auto& v : table.rows[r].values) row.push_back(v.get_str());
        t.rows.push_back(std::move(row));
    }
    out << t.render(f);
    return exit_ok;
}

int cmd_decompose(const std::string& path, bool allow_virtual, Format f, std::ostream& out, const Logger& log) {
    const auto chi = store::character_from_json(load_payload(path, "character"));
    log("decomposing a class function of S_" + std::to_string(chi.n));
    if (allow_virtual) {
        const auto rep = decompose_virtual(chi);
        if (f == Format::json) {
            Json j = Json::array();
            for (const auto& [lambda, c] : rep.multiplicities()) j.push_back({store::to_json(lambda), store::to_json(c)});
            out << Json{{"n", chi.n}, {"multiplicities", j}}.dump() << "\n";
            return exit_ok;
        }
        TextTable t{{"lambda", "multiplicity"}, {}};
        for (const auto& [lambda, c] : rep.multiplicities()) t.rows.push_back({lambda.to_string(), c.get_str()});
        out << t.render(f);
        return exit_ok;
    }
    const auto rep = decompose_character(chi);
    if (f == Format::json) {
        out << store::encode(rep) << "\n";
        return exit_ok;
    }
    TextTable t{{"lambda", "multiplicity", "dimension"}, {}};
    for (const auto& [lambda, c] : rep.multiplicities()) t.rows.push_back({lambda.to_string(), c.get_str(), hook_dimension(lambda).get_str()});
    t.rows.push_back({"total", "", rep.dimension().get_str()});
    out << t.render(f);
    return exit_ok;
}

int cmd_fimod_info(const std::string& path, Format f, std::ostream& out, const Logger& log) {
    const auto table = load_table(path);
    log("table '" + table.name() + "' with levels 0.." + std::to_string(table.max_n()));
    Json j;
    TextTable t{{"property", "value"}, {}};
    auto add = [&](const std::string& key, const Json& value, const std::string& text) {
        j[key] = value;
        t.rows.push_back({key, text});
    };
    add("name", table.name(), table.name());
    add("fi_sharp", table.fi_sharp(), table.fi_sharp() ? "yes" : "no");
    add("max_n", table.max_n(), std::to_string(table.max_n()));
    const auto weight = weight_of(table);
    add("weight", weight.weight, std::to_string(weight.weight));
    add("generation_degree", generation_degree(table), std::to_string(generation_degree(table)));
    if (table.fi_sharp()) {
        const auto gens = h0_decompose(table);
        add("h0", generators_json(gens), generators_string(gens));
    }
    std::optional<int> upper;
    try {
        // largest q_max (at most weight + 2) that the table is deep enough to certify
        std::optional<StabilityBounds> found;
        std::optional<Error> last;
        for (int q = weight.weight + 2; q >= 0 && !found; --q) {
            try {
                found = stability_degree_bounds(table, q);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::TableTooShallow) throw;
                last = e;
            }
        }
        if (!found) throw *last;
        const auto& b = *found;
        upper = b.upper;
        add("stability_degree", Json{{"lower", b.lower}, {"upper", b.upper ? Json(*b.upper) : Json(nullptr)}, {"q_max", b.q_max}},
            std::to_string(b.lower) + " <= r <= " + opt_string(b.upper) + (b.certified() ? " (certified)" : "") +
                " (q <= " + std::to_string(b.q_max) + ")");
    } catch (const Error& e) {
        add("stability_degree", Json{{"error", e.what()}}, std::string("unavailable: ") + e.what());
    }
    try {
        const auto poly = dimension_polynomial(table);
        add("dimension_polynomial",
            Json{{"binomial_coefficients", [&] {
                      Json a = Json::array();
                      for (const auto& c : poly.coefficients) a.push_back(store::to_json(c));
                      return a;
                  }()},
                 {"onset", poly.onset},
                 {"text", poly.to_power_string("k")}},
            poly.to_power_string("k") + " = " + binomial_text(poly) + " for k >= " + std::to_string(poly.onset));
    } catch (const Error& e) {
        add("dimension_polynomial", Json{{"error", e.what()}}, std::string("unavailable: ") + e.what());
    }
    try {
        const int range = upper ? predicted_range(*upper, weight.weight) : std::max(0, table.max_n() - 2);
        const auto rs = check_uniform_repstab(table, range);
        add("repstab",
            Json{{"range", range}, {"passed", rs.passed}, {"onset", rs.onset}, {"onset_defined_labels", rs.onset_defined_labels},
                 {"stable_multiplicities", generators_json(rs.stable_multiplicities)}},
            "onset " + std::to_string(rs.onset) + " (defined labels " + std::to_string(rs.onset_defined_labels) + "), range " +
                std::to_string(range) + (rs.passed ? " holds" : " fails"));
    } catch (const Error& e) {
        add("repstab", Json{{"error", e.what()}}, std::string("unavailable: ") + e.what());
    }
    if (f == Format::json) out << j.dump(2) << "\n";
    else out << t.render(f);
    return exit_ok;
}

int cmd_fimod_tensor(const std::string& a, const std::string& b, const std::string& out_path, Format f, std::ostream& out,
                     const Logger& log) {
    const auto fa = load_table(a);
    const auto fb = load_table(b);
    log("tensoring '" + fa.name() + "' with '" + fb.name() + "'");
    const auto product = tensor_fimod(fa, fb);
    const std::string sealed = store::encode(product);
    if (!out_path.empty()) write_output_file(out_path, sealed, log);
    if (f == Format::json) {
        out << sealed << "\n";
        return exit_ok;
    }
    const auto& m = product.metadata();
    out << "# " << product.name() << "\n\n";
    out << "weight bound " << opt_string(m.weight_bound) << ", generation bound " << opt_string(m.generation_bound)
        << ", stability bound " << opt_string(m.stability_bound) << "\n\n";
    out << levels_table(product).render(f);
    return exit_ok;
}

int cmd_config(const std::string& parity_text, int weight, int k_max, const std::string& side, const std::string& out_path, Format f,
               std::ostream& out, const Logger& log) {
    const Parity parity = parse_parity(parity_text);
    if (weight < 1) throw Error(ErrorCode::InvalidArgument, "--lie-weight must be at least 1");
    if (k_max < 0) throw Error(ErrorCode::InvalidArgument, "--kmax must be non-negative");
    if (k_max > max_dk_points) throw Error(ErrorCode::ScaleExceeded, "--kmax is limited to " + std::to_string(max_dk_points));
    const int weight_limit = side == "cohomology" ? max_arnold_degree : max_dk_weight;
    if (weight > weight_limit) throw Error(ErrorCode::ScaleExceeded, "--lie-weight is limited to " + std::to_string(weight_limit) + " on the " + side + " side");
    const int n = minimal_dimension(parity);
    log(side + " side, n = " + std::to_string(n) + ", degree index " + std::to_string(weight));
    FIModuleTable table = side == "cohomology" ? cohomology_fi_module(parity, weight, k_max)
                          : side == "loop"     ? loop_fi_module(parity, weight, k_max)
                                               : homotopy_fi_module(parity, weight, k_max);
    const std::string sealed = store::encode(table);
    if (!out_path.empty()) write_output_file(out_path, sealed, log);
    if (f == Format::json) {
        out << sealed << "\n";
        return exit_ok;
    }
    if (f == Format::md) {
        out << "# " << table.name() << "\n\n";
        int i = 0;
        if (side == "cohomology") i = weight * (n - 1);
        else if (side == "loop") i = weight * (n - 2);
        else i = homotopy_degree(n, weight);
        out << side << " side, parity " << to_string(parity) << " (n = " << n << "), degree i = " << i << "\n\n";
    }
    out << levels_table(table).render(f);
    return exit_ok;
}

int cmd_freelie(int d, int m, int piece, int n_max, Format f, std::ostream& out, const Logger& log) {
    if (d < 2 || m < 1 || piece < 0 || n_max < 0) throw Error(ErrorCode::InvalidArgument, "need d >= 2, m >= 1, piece >= 0, nmax >= 0");
    if (n_max > max_lie_generators) throw Error(ErrorCode::ScaleExceeded, "--nmax is limited to " + std::to_string(max_lie_generators));
    const int max_weight = (piece + m - 1) / (d + m - 1);
    if (max_weight > max_lie_weight) throw Error(ErrorCode::ScaleExceeded, "piece " + std::to_string(piece) + " needs Lie weight up to " + std::to_string(max_weight) + " (limit " + std::to_string(max_lie_weight) + ")");
    log("free Lie and Gerstenhaber pieces, d = " + std::to_string(d) + ", m = " + std::to_string(m) + ", l = " + std::to_string(piece));
    const auto report = verify_algebra_weight_bound(d, m, piece, n_max);
    const int code = report.passed() ? exit_ok : exit_assertion;
    if (f == Format::json) {
        Json j{{"d", d},
               {"m", m},
               {"piece", piece},
               {"n_max", n_max},
               {"bound", store::to_json(report.bound)},
               {"lie_weight", report.lie_weight},
               {"gerstenhaber_weight", report.gerstenhaber_weight},
               {"passed", report.passed()},
               {"lie", store::to_json(report.lie_table)},
               {"gerstenhaber", store::to_json(report.gerstenhaber_table)}};
        out << j.dump(2) << "\n";
        return code;
    }
    TextTable t{{"n", "Lie piece", "Lie dim", "Gerstenhaber piece", "Gerstenhaber dim"}, {}};
    for (int n = 0; n <= n_max; ++n) {
        const auto& a = report.lie_table.level(n);
        const auto& b = report.gerstenhaber_table.level(n);
        t.rows.push_back({std::to_string(n), to_string(a), a.dimension().get_str(), to_string(b), b.dimension().get_str()});
    }
    if (f == Format::md) {
        out << "# L and G, d = " << d << ", m = " << m << ", l = " << piece << "\n\n";
        out << "weight bound (m+2)/(m+d)*l = " << report.bound.get_str() << "; Lie weight " << report.lie_weight
            << (report.lie_ok ? " ok" : " VIOLATES") << "; Gerstenhaber weight " << report.gerstenhaber_weight
            << (report.gerstenhaber_ok ? " ok" : " VIOLATES") << "\n\n";
    }
    out << t.render(f);
    return code;
}

int cmd_verify(const std::string& suite, const std::vector<int>& only, Format f, std::ostream& out, const Logger& log) {
    std::vector<int> ids = only.empty() ? verify::suite_criteria(suite) : only;
    for (int id : ids) verify::criterion_title(id);  // validates ids before running anything
    std::vector<verify::CriterionResult> results;
    for (int id : ids) {
        log("criterion " + std::to_string(id) + ": " + verify::criterion_title(id));
        results.push_back(verify::run_criterion(id));
        log(std::string(results.back().passed ? "  pass" : "  FAIL") + " in " + std::to_string(results.back().seconds) + "s");
    }
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (f == Format::json) {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                           {"budget_seconds", r.budget_seconds}});
        out << Json{{"suite", only.empty() ? suite : std::string("custom")}, {"passed", all}, {"criteria", arr}}.dump(2) << "\n";
    } else {
        TextTable t{{"criterion", "result", "title", "seconds", "detail"}, {}};
        for (const auto& r : results) {
            std::ostringstream secs;
            secs << std::fixed << std::setprecision(2) << r.seconds;
            t.rows.push_back({std::to_string(r.id), r.passed ? "PASS" : "FAIL", r.title, secs.str(), r.detail});
        }
        out << t.render(f);
    }
    return all ? exit_ok : exit_assertion;
}

int cmd_repstab_check(const std::string& path, int range, Format f, std::ostream& out, const Logger& log) {
    if (range < 0) throw Error(ErrorCode::InvalidArgument, "--range must be non-negative");
    const std::string text = store::read_file(path);
    const Json payload = load_payload(path, "");
    std::string kind;
    if (text.find("\"schema_version\"") != std::string::npos) {
        kind = store::peek_kind(text);
    } else {
        const bool sequence = payload.contains("levels") && payload["levels"].is_array() && !payload["levels"].empty() &&
                              payload["levels"][0].is_object() && payload["levels"][0].contains("generators");
        kind = sequence ? "consistent-sequence" : "fimod-table";
    }
    RepStabReport report;
    if (kind == "consistent-sequence") {
        const auto seq = store::sequence_from_json(payload);
        log("checking consistent sequence '" + seq.name + "'");
        report = check_uniform_repstab(seq, range);
    } else if (kind == "fimod-table") {
        const auto table = store::fimod_from_json(payload);
        log("checking table '" + table.name() + "'");
        report = check_uniform_repstab(table, range);
    } else {
        throw Error(ErrorCode::SchemaError, "repstab-check needs a fimod-table or consistent-sequence, got '" + kind + "'");
    }
    const int code = report.passed ? exit_ok : exit_assertion;
    if (f == Format::json) {
        out << store::encode(report) << "\n";
        return code;
    }
    TextTable t{{"property", "value"}, {}};
    t.rows.push_back({"range", std::to_string(report.claimed_range)});
    t.rows.push_back({"passed", report.passed ? "yes" : "no"});
    t.rows.push_back({"onset", std::to_string(report.onset)});
    t.rows.push_back({"onset (defined labels)", std::to_string(report.onset_defined_labels)});
    t.rows.push_back({"observed up to", std::to_string(report.observed_max_n)});
    if (report.extended_by_classification) t.rows.push_back({"extended by H_0", "yes"});
    t.rows.push_back({"injective from", opt_string(report.injective_from)});
    t.rows.push_back({"spanning from", opt_string(report.spanning_from)});
    t.rows.push_back({"stable multiplicities", generators_string(report.stable_multiplicities)});
    for (const auto& failure : report.failures) t.rows.push_back({"failure", failure});
    out << t.render(f);
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact representation-stability calculator for FI-modules and configuration spaces", "repstab"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
    auto* cache_opt = app.add_option("--cache-dir", g.cache_dir, "Character-table cache directory (empty disables)");
    app.add_flag("--verbose,-v", g.verbose, "Step logs on standard error");

    int chartab_n = -1;
    std::string chartab_in, chartab_out;
    auto* chartab = app.add_subcommand("chartab", "Emit or inspect a character table");
    chartab->add_option("--n", chartab_n, "Rank n");
    chartab->add_option("--in", chartab_in, "Inspect a stored table instead");
    chartab->add_option("--out", chartab_out, "Also write the table envelope here");

    std::string character_file;
    bool allow_virtual = false;
    auto* decompose = app.add_subcommand("decompose", "Decompose a class function into irreducibles");
    decompose->add_option("--character", character_file, "Character JSON file")->required();
    decompose->add_flag("--virtual", allow_virtual, "Allow negative multiplicities");

    auto* fimod = app.add_subcommand("fimod", "FI-module tables");
    fimod->require_subcommand(1);
    std::string info_file;
    auto* info = fimod->add_subcommand("info", "Weight, degrees, polynomial and stability onset");
    info->add_option("file", info_file, "FI-module table JSON")->required();
    std::string tensor_a, tensor_b, tensor_out;
    auto* tensor = fimod->add_subcommand("tensor", "Levelwise tensor product with bound metadata");
    tensor->add_option("a", tensor_a, "First table")->required();
    tensor->add_option("b", tensor_b, "Second table")->required();
    tensor->add_option("--out", tensor_out, "Write the product table here");

    std::string parity_text, side = "homotopy", config_out;
    int lie_weight = 1, k_max = 6;
    auto* config = app.add_subcommand("config", "Configuration spaces of R^n: homotopy, cohomology or loop homology");
    config->add_option("--parity", parity_text, "Parity of n")->required()->check(CLI::IsMember({"even", "odd"}));
    config->add_option("--lie-weight", lie_weight, "Lie weight m (Arnold degree j, loop weight t)");
    config->add_option("--kmax", k_max, "Largest number of points");
    config->add_option("--side", side, "Which side")->check(CLI::IsMember({"homotopy", "cohomology", "loop"}));
    config->add_option("--out", config_out, "Also write the table envelope here");

    int d = 2, m = 1, piece = 0, n_max = 6;
    auto* freelie = app.add_subcommand("freelie", "Free Lie and Gerstenhaber characters with the weight-bound check");
    freelie->add_option("--d", d, "Generator degree")->required();
    freelie->add_option("--m", m, "Bracket degree is m-1")->required();
    freelie->add_option("--piece", piece, "Internal degree l")->required();
    freelie->add_option("--nmax", n_max, "Largest number of generators");

    std::string suite = "all";
    std::vector<int> only;
    auto* verify_cmd = app.add_subcommand("verify", "Run acceptance assertions");
    verify_cmd->add_option("--suite", suite, "Suite")->check(CLI::IsMember(verify::suite_names()));
    verify_cmd->add_option("--criterion", only, "Run only these criteria")->check(CLI::Range(1, verify::criterion_count));

    std::string check_file;
    int range = 0;
    auto* check = app.add_subcommand("repstab-check", "Check uniform representation stability");
    check->add_option("file", check_file, "FI-module table or consistent sequence JSON")->required();
    check->add_option("--range", range, "Claimed stable range N")->required();

    for (auto* sub : {chartab, decompose, fimod, info, tensor, config, freelie, verify_cmd, check}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    Logger log(err, g.verbose);
    if (cache_opt->count() > 0) {
        store::set_cache_directory(g.cache_dir.empty() ? std::optional<std::filesystem::path>(std::filesystem::path())
                                                       : std::optional<std::filesystem::path>(g.cache_dir));
    }
    if (auto dir = store::cache_directory()) log("character-table cache at " + dir->string());
    else log("character-table cache disabled");

    const Format f = parse_format(g.format);
    try {
        if (chartab->parsed()) {
            if (chartab_in.empty() && chartab->count("--n") == 0) {
                err << "usage error: chartab needs --n or --in\n";
                return exit_usage;
            }
            return cmd_chartab(chartab_n, chartab_in, chartab_out, f, out, log);
        }
        if (decompose->parsed()) return cmd_decompose(character_file, allow_virtual, f, out, log);
        if (info->parsed()) return cmd_fimod_info(info_file, f, out, log);
        if (tensor->parsed()) return cmd_fimod_tensor(tensor_a, tensor_b, tensor_out, f, out, log);
        if (config->parsed()) return cmd_config(parity_text, lie_weight, k_max, side, config_out, f, out, log);
        if (freelie->parsed()) return cmd_freelie(d, m, piece, n_max, f, out, log);
        if (verify_cmd->parsed()) return cmd_verify(suite, only, f, out, log);
        if (check->parsed()) return cmd_repstab_check(check_file, range, f, out, log);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_usage;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace repstab::cli
