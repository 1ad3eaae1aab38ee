#pragma once

// Report builders for each subcommand. Every report is assembled as ordered
// JSON first; the plain-text output is rendered from the same object, so
// both views always agree.

#include <optional>
#include <ostream>
#include <string>

#include "fermat/bounds.hpp"
#include "support.hpp"

namespace fermat::cli {

Json fields_report();
void render_fields(const Json& r, std::ostream& out);

struct FreyArgs
{
    long d;
    std::string a, b, c;
    unsigned long p;
    std::uint64_t norm_bound;
};
Json frey_report(const FreyArgs& args);
void render_frey(const Json& r, std::ostream& out);

Json ck_report(CkCase which);
void render_ck(const Json& r, std::ostream& out);

Json rcg_report(long d, int m);
void render_rcg(const Json& r, std::ostream& out);

Json aq_report(long d, std::uint64_t norm);
void render_aq(const Json& r, std::ostream& out);

Json bk_report(long d, const std::optional<Integer>& mk, bool cubic_solvable);
void render_bk(const Json& r, std::ostream& out);

struct EliminateArgs
{
    long d;
    std::string forms_text;
    std::string forms_sha256;
    std::uint64_t norm_bound;
    Integer bk;
    std::string bk_source;
};
Json eliminate_report(const EliminateArgs& args);
/// Adds an "expectations" array; returns false if any expectation failed.
bool attach_expectations(Json& report, const std::string& expectations_text);
bool has_survivors(const Json& report);
void render_eliminate(const Json& r, std::ostream& out);

struct ScreenArgs
{
    std::string signature; ///< "pp3" or "pp2"
    unsigned budget;
    std::string input_text;
    std::string input_sha256;
};
Json screen_report(const ScreenArgs& args);
void render_screen(const Json& r, std::ostream& out);
void render_screen_csv(const Json& r, std::ostream& out);

Json tower_report(int n);
void render_tower(const Json& r, std::ostream& out);

void render_pipeline(const Json& r, std::ostream& out);

} // namespace fermat::cli
