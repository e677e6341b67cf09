#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftsent/classifier.hpp"

namespace ftsent {

using Json = nlohmann::ordered_json;

/// Parse or input validation failure; maps to exit code 1 at the CLI.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One input state. Amplitude order is decimal-binary a000..a111 (the single
/// most likely user error; see the README format note). In exact mode every
/// amplitude is a pair of rational strings "p/q".
struct StateRecord {
    std::string id;
    std::array<Complex, 8> amps{};
    bool exact = false;
    std::array<std::pair<std::string, std::string>, 8> exact_amps{};

    ThreeQubitState<Complex> to_state() const;
    ThreeQubitState<GaussianRational> to_exact_state() const;
};

/// JSON input: array of {"id": str, "amplitudes": [[re, im] x 8]}, numbers or
/// rational strings (the latter set the exact flag).
std::vector<StateRecord> parse_states_json(std::istream& in);

/// CSV input: header optional; 17 columns id, a0_re, a0_im, ..., a7_re, a7_im.
std::vector<StateRecord> parse_states_csv(std::istream& in);

/// Sniffs JSON ('[' or '{' first) vs CSV.
std::vector<StateRecord> parse_states(std::istream& in);

/// Inline amplitudes: 8 (imaginary parts zero) or 16 comma-separated values;
/// rational strings when exact.
StateRecord parse_inline_amps(const std::string& text, bool exact);

/// Deterministic float formatting (%.17g round-trip).
std::string format_double(double v);

Json classification_to_json(const std::string& id, const Classification<Complex>& c);
Json classification_to_json(const std::string& id, const Classification<GaussianRational>& c);

Json invariant_report_to_json(const std::string& id, const ThreeQubitState<Complex>& s);
Json invariant_report_to_json(const std::string& id, const ThreeQubitState<GaussianRational>& s);

std::string classification_csv_header();
std::string classification_to_csv_row(const std::string& id, const Classification<Complex>& c);

std::string invariants_csv_header();
std::string invariants_to_csv_row(const std::string& id, const ThreeQubitState<Complex>& s);

/// CLI exit-code contract.
enum ExitCode : int {
    kExitOk = 0,
    kExitIoError = 1,
    kExitAmbiguous = 2,
    kExitInconsistent = 3,
};

}  // namespace ftsent
