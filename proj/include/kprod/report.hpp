#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kprod/graph.hpp"

namespace kprod {

enum class Verdict { pass, fail };

/// One computed quantity in a report: an integer or a boolean.
using ReportValue = std::variant<std::int64_t, bool>;

/// Canonical inputs of a check. `graphs` holds graph6 strings (one per factor).
struct ReportInputs {
    std::vector<std::string> graphs;
    std::optional<int> n;
    std::vector<Vertex> separator;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const ReportInputs&, const ReportInputs&) = default;
};

/// Machine-readable record of one theorem or lemma check.
struct VerificationReport {
    std::string check_name;
    ReportInputs inputs;
    std::map<std::string, ReportValue> computed;
    Verdict verdict = Verdict::fail;
    std::int64_t elapsed_ms = 0;

    bool passed() const noexcept { return verdict == Verdict::pass; }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

/// Times a check body and stamps elapsed_ms on the returned report.
template <class Fn>
VerificationReport timed(Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report = body();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

}  // namespace kprod
