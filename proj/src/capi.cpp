#include "shellfill/shellfill_c.h"

#include <cstring>
#include <string>

#include "shellfill/json_io.hpp"

using namespace shellfill;

struct sf_chain {
    int n;
    FChain chain;
};

namespace {

thread_local std::string g_last_error;

int status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return SF_ERR_PARSE;
        case ErrorCode::InvalidArgument:
        case ErrorCode::Overflow: return SF_ERR_ARG;
        case ErrorCode::BudgetExhausted: return SF_ERR_BUDGET;
        case ErrorCode::Internal: return SF_ERR_INTERNAL;
        default: return SF_ERR_PRECONDITION;
    }
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return SF_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SF_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ShellSpec make_spec(int n, int k1, int k2, int k3) {
    return ShellSpec(ModelParams(n), k1, k2, k3);
}

int search_result(const std::optional<int>& len, int* out_len) {
    *out_len = len ? *len : -1;
    return SF_OK;
}

} // namespace

extern "C" {

const char* sf_last_error(void) { return g_last_error.c_str(); }

void sf_string_free(char* text) { delete[] text; }

int sf_shell_offset(int n, int k1, int k2, int k3, int* out_k4) {
    return guarded([&] { *out_k4 = sector_offset(make_spec(n, k1, k2, k3)); });
}

int sf_min_fill_length(int n, int k1, int k2, int k3, int* out_len) {
    return guarded([&] { *out_len = min_fill_length(make_spec(n, k1, k2, k3)); });
}

int sf_search_fill_arith(int n, int k1, int k2, int k3, int max_len, int* out_len) {
    return guarded(
        [&] { search_result(min_fill_search_arith(make_spec(n, k1, k2, k3), max_len), out_len); });
}

int sf_search_fill_grid(int n, int k1, int k2, int k3, int max_len, int* out_len) {
    return guarded(
        [&] { search_result(min_fill_search_grid(make_spec(n, k1, k2, k3), max_len), out_len); });
}

int sf_weak_three_amalgamation(int n, int* out_holds, int out_witness[3], int* out_witness_len) {
    return guarded([&] {
        WeakAmalgamationReport report = weak_three_amalgamation(ModelParams(n));
        *out_holds = report.holds ? 1 : 0;
        if (report.witness) {
            out_witness[0] = report.witness->k1;
            out_witness[1] = report.witness->k2;
            out_witness[2] = report.witness->k3;
            *out_witness_len = report.witness_fill_length;
        } else {
            out_witness[0] = out_witness[1] = out_witness[2] = -1;
            *out_witness_len = -1;
        }
    });
}

int sf_build_shell(int n, int k1, int k2, int k3, char** out_json) {
    return guarded([&] {
        Shell1 shell = build_shell(make_spec(n, k1, k2, k3));
        *out_json = copy_string(chain_to_json(shell.chain()));
    });
}

namespace {

void report_out(const FillReport& report, int n, char** out_json, int* out_len,
                int* out_boundary_ok) {
    *out_json = copy_string(fill_report_to_json(report, n));
    *out_len = (int)report.length;
    *out_boundary_ok = report.boundary_ok ? 1 : 0;
}

} // namespace

int sf_construct_fill(int n, int k1, int k2, int k3, char** out_json, int* out_len,
                      int* out_boundary_ok) {
    return guarded([&] {
        ShellSpec spec = make_spec(n, k1, k2, k3);
        FillReport report = construct_min_fill(spec, build_shell(spec));
        report_out(report, n, out_json, out_len, out_boundary_ok);
    });
}

int sf_lascar_fill(int n, int k1, int k2, int k3, char** out_json, int* out_len,
                   int* out_boundary_ok) {
    return guarded([&] {
        ShellSpec spec = make_spec(n, k1, k2, k3);
        FillReport report = fill_shell_lascar(build_shell(spec), spec.params);
        report_out(report, n, out_json, out_len, out_boundary_ok);
    });
}

int sf_lascar_fill_shell(int n, const char* shell_json, char** out_json, int* out_len,
                         int* out_boundary_ok) {
    return guarded([&] {
        ModelParams params(n);
        FChain c = chain_from_json(shell_json, params);
        if (!is_shell(c) || c.term_count() != 3)
            fail(ErrorCode::NotOneShellBoundary, "input chain is not a 1-shell");
        SupportSet verts = c.support();
        Shell1 shell;
        for (const auto& [f, coeff] : c.terms()) {
            int missing = set_minus(verts, f.support())[0];
            if (missing == verts[0])
                shell.s12 = f;
            else if (missing == verts[1])
                shell.s02 = f;
            else
                shell.s01 = f;
        }
        if (!(c.coeff(shell.s12) == 1))
            fail(ErrorCode::NotOneShellBoundary, "shell must be oriented f12 - f02 + f01");
        FillReport report = fill_shell_lascar(shell, params);
        report_out(report, n, out_json, out_len, out_boundary_ok);
    });
}

int sf_chain_parse(int n, const char* json, sf_chain** out) {
    return guarded([&] {
        ModelParams params(n);
        *out = new sf_chain{n, chain_from_json(json, params)};
    });
}

void sf_chain_free(sf_chain* chain) { delete chain; }

int sf_chain_to_json(const sf_chain* chain, char** out_json) {
    return guarded([&] { *out_json = copy_string(chain_to_json(chain->chain)); });
}

int sf_chain_length(const sf_chain* chain, long long* out_len) {
    return guarded([&] { *out_len = chain->chain.length(); });
}

int sf_chain_has_shell_boundary(const sf_chain* chain, int* out) {
    return guarded([&] {
        try {
            one_shell_boundary(chain->chain);
            *out = 1;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotOneShellBoundary) throw;
            *out = 0;
        }
    });
}

int sf_chain_classify(const sf_chain* chain, int* out_kind) {
    return guarded([&] {
        *out_kind = classify(chain->chain) == ChainKind::Renameable ? SF_KIND_RENAMEABLE
                                                                    : SF_KIND_NONRENAMEABLE;
    });
}

int sf_chain_minimal(const sf_chain* chain, long long budget, int* out_verdict) {
    return guarded([&] {
        if (budget <= 0) fail(ErrorCode::InvalidArgument, "budget must be positive");
        switch (check_minimal(chain->chain, (std::size_t)budget, ModelParams(chain->n))) {
            case MinimalityVerdict::Minimal: *out_verdict = SF_MINIMAL_YES; break;
            case MinimalityVerdict::NotMinimal: *out_verdict = SF_MINIMAL_NO; break;
            case MinimalityVerdict::Unknown: *out_verdict = SF_MINIMAL_UNKNOWN; break;
        }
    });
}

int sf_chain_standard_form(const sf_chain* chain, long long budget, char** out_json) {
    return guarded([&] {
        if (budget <= 0) fail(ErrorCode::InvalidArgument, "budget must be positive");
        FChain std_form = to_standard_form(chain->chain, ModelParams(chain->n), (std::size_t)budget);
        *out_json = copy_string(chain_to_json(std_form));
    });
}

} // extern "C"
