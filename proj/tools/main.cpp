// Command-line front end. Talks to the core exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shellfill/shellfill_c.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPrecondition = 3;

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { sf_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

[[noreturn]] void die(int code, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(code);
}

void check(int status, int exit_code = kExitPrecondition) {
    if (status == SF_OK) return;
    int code = exit_code;
    if (status == SF_ERR_ARG) code = kExitConfig;
    if (status == SF_ERR_PARSE) code = kExitConfig;
    die(code, sf_last_error());
}

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        die(kExitConfig, "bad range: " + text);
    }
    if (r.lo < 2 || r.hi < r.lo) die(kExitConfig, "rotation orders must satisfy 2 <= A <= B");
    return r;
}

std::vector<int> parse_spec(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ','))
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            die(kExitConfig, "bad spec: " + text);
        }
    if (out.size() != 3) die(kExitConfig, "spec must be k1,k2,k3");
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) die(kExitConfig, "cannot write " + path);
    os << content;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) die(kExitConfig, "cannot read " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

struct TableRow {
    int n, k1, k2, k3, k4, ns, oracle_len, lascar_len;
    bool match;
};

int cmd_table(const Range& n_range, const std::optional<std::vector<int>>& spec_filter,
              int oracle_max, const std::string& format, const std::string& out_path,
              long long seed) {
    if (oracle_max < 1 || oracle_max % 2 == 0)
        die(kExitConfig, "--oracle-max must be odd and positive");

    std::vector<TableRow> rows;
    bool all_match = true;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < n; ++k2)
                for (int k3 = 0; k3 < n; ++k3) {
                    if (spec_filter &&
                        ((*spec_filter)[0] != k1 || (*spec_filter)[1] != k2 || (*spec_filter)[2] != k3))
                        continue;
                    TableRow row{n, k1, k2, k3, 0, 0, -1, -1, false};
                    check(sf_shell_offset(n, k1, k2, k3, &row.k4));
                    check(sf_min_fill_length(n, k1, k2, k3, &row.ns));
                    int arith = -1;
                    check(sf_search_fill_arith(n, k1, k2, k3, oracle_max, &arith));
                    int grid = -1;
                    bool grid_ran = false;
                    int status = sf_search_fill_grid(n, k1, k2, k3, oracle_max, &grid);
                    if (status == SF_OK) {
                        grid_ran = true;
                    } else if (status != SF_ERR_ARG) {
                        check(status); // grid search out of range falls back to arithmetic
                    }
                    row.oracle_len = arith;
                    OwnedString fill;
                    int boundary_ok = 0;
                    check(sf_lascar_fill(n, k1, k2, k3, &fill.ptr, &row.lascar_len, &boundary_ok));
                    row.match = row.oracle_len == row.ns && boundary_ok == 1 &&
                                (!grid_ran || grid == arith);
                    all_match = all_match && row.match;
                    rows.push_back(row);
                }
    }

    std::ostringstream os;
    if (format == "csv") {
        os << "n,k1,k2,k3,k4,n_s,oracle_len,lascar_len,match\n";
        for (const auto& r : rows)
            os << r.n << ',' << r.k1 << ',' << r.k2 << ',' << r.k3 << ',' << r.k4 << ',' << r.ns
               << ',' << r.oracle_len << ',' << r.lascar_len << ',' << (r.match ? 1 : 0) << '\n';
    } else {
        json doc;
        doc["meta"] = {{"command", "table"},
                       {"n_lo", n_range.lo},
                       {"n_hi", n_range.hi},
                       {"oracle_max", oracle_max},
                       {"seed", seed}};
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back({{"n", r.n},
                             {"k1", r.k1},
                             {"k2", r.k2},
                             {"k3", r.k3},
                             {"k4", r.k4},
                             {"n_s", r.ns},
                             {"oracle_len", r.oracle_len},
                             {"lascar_len", r.lascar_len},
                             {"match", r.match}});
        doc["rows"] = jrows;
        os << doc.dump() << "\n";
    }
    write_output(out_path, os.str());
    return all_match ? kExitOk : kExitMismatch;
}

int cmd_fill(int n, const std::optional<std::vector<int>>& spec,
             const std::string& shell_path, const std::string& method,
             const std::string& out_path) {
    OwnedString fill;
    int len = 0, boundary_ok = 0;
    if (spec && !shell_path.empty()) die(kExitConfig, "give either --spec or --shell");
    if (spec) {
        if (method == "lascar")
            check(sf_lascar_fill(n, (*spec)[0], (*spec)[1], (*spec)[2], &fill.ptr, &len,
                                 &boundary_ok));
        else
            check(sf_construct_fill(n, (*spec)[0], (*spec)[1], (*spec)[2], &fill.ptr, &len,
                                    &boundary_ok));
    } else if (!shell_path.empty()) {
        std::string shell_json = read_file(shell_path);
        check(sf_lascar_fill_shell(n, shell_json.c_str(), &fill.ptr, &len, &boundary_ok));
    } else {
        die(kExitConfig, "fill needs --spec or --shell");
    }
    write_output(out_path, fill.str() + "\n");
    return boundary_ok == 1 ? kExitOk : kExitMismatch;
}

int cmd_classify(int n, const std::string& chain_path, long long budget,
                 const std::string& out_path) {
    std::string text = read_file(chain_path);
    sf_chain* chain = nullptr;
    check(sf_chain_parse(n, text.c_str(), &chain));

    int has_shell = 0;
    check(sf_chain_has_shell_boundary(chain, &has_shell));
    if (has_shell != 1) {
        sf_chain_free(chain);
        die(kExitPrecondition, "chain boundary is not a 1-shell");
    }

    int kind = 0;
    check(sf_chain_classify(chain, &kind));
    int verdict = SF_MINIMAL_UNKNOWN;
    check(sf_chain_minimal(chain, budget, &verdict));
    long long len = 0;
    check(sf_chain_length(chain, &len));

    json doc;
    doc["n"] = n;
    doc["length"] = len;
    doc["kind"] = kind == SF_KIND_RENAMEABLE ? "renameable" : "non-renameable";
    doc["minimal"] = verdict == SF_MINIMAL_YES    ? "yes"
                     : verdict == SF_MINIMAL_NO   ? "no"
                                                  : "unknown";
    doc["budget"] = budget;
    if (kind == SF_KIND_RENAMEABLE && verdict != SF_MINIMAL_NO) {
        OwnedString std_form;
        check(sf_chain_standard_form(chain, budget, &std_form.ptr));
        doc["standard_form"] = json::parse(std_form.str());
    }
    sf_chain_free(chain);
    write_output(out_path, doc.dump() + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chain calculus over circular rotation structures"};
    app.require_subcommand(1);

    std::string n_text = "2..6";
    std::string spec_text;
    std::string shell_path;
    std::string chain_path;
    std::string format = "csv";
    std::string out_path = "-";
    std::string method = "construct";
    int oracle_max = 9;
    long long budget = 10000;
    long long seed = 0;

    auto* table = app.add_subcommand("table", "minimal fill lengths against both searches");
    table->add_option("--n", n_text, "rotation orders A..B");
    table->add_option("--spec", spec_text, "restrict to one k1,k2,k3");
    table->add_option("--oracle-max", oracle_max, "largest fill length searched");
    table->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", out_path, "output path, - for stdout");
    table->add_option("--seed", seed, "recorded in metadata");

    auto* fill = app.add_subcommand("fill", "fill one shell");
    fill->add_option("--n", n_text, "rotation order");
    fill->add_option("--spec", spec_text, "shell spec k1,k2,k3");
    fill->add_option("--shell", shell_path, "serialized shell file");
    fill->add_option("--method", method, "construct or lascar")
        ->check(CLI::IsMember({"construct", "lascar"}));
    fill->add_option("--out", out_path, "output path, - for stdout");
    fill->add_option("--seed", seed, "recorded in metadata");

    auto* classify = app.add_subcommand("classify", "classify a 2-chain with a 1-shell boundary");
    classify->add_option("--n", n_text, "rotation order");
    classify->add_option("chain", chain_path, "chain JSON file")->required();
    classify->add_option("--budget", budget, "state budget for the minimality search");
    classify->add_option("--out", out_path, "output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int status = app.exit(e);
        return status == 0 ? kExitOk : kExitConfig;
    }

    std::optional<std::vector<int>> spec;
    if (!spec_text.empty()) spec = parse_spec(spec_text);

    if (table->parsed()) {
        return cmd_table(parse_range(n_text), spec, oracle_max, format, out_path, seed);
    }
    if (fill->parsed()) {
        Range r = parse_range(n_text);
        if (r.lo != r.hi) die(kExitConfig, "fill takes a single rotation order");
        return cmd_fill(r.lo, spec, shell_path, method, out_path);
    }
    Range r = parse_range(n_text);
    if (r.lo != r.hi) die(kExitConfig, "classify takes a single rotation order");
    return cmd_classify(r.lo, chain_path, budget, out_path);
}
