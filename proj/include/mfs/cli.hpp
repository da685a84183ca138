#pragma once

#include "mfs/exact.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mfs::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFail = 2, kResourceGuard = 3 };

/// Bad command-line input; maps to kUsage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleBlock {
    std::string partial_sum;
    unsigned depth = 0;
    std::string mode;
    std::string delta;
    std::string tail;
    bool tail_credited = false;
    std::string tolerance;
    bool pass = false;

    friend bool operator==(const OracleBlock&, const OracleBlock&) = default;
};

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::string exact;
    std::string decimal;
    std::optional<OracleBlock> oracle;
    std::vector<std::string> notes;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

struct TableRecord {
    unsigned max_k = 0;
    /// rows[k-1][j]: S_{k,0} in full, then the e-coefficient of S_{k,j}.
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> a_values;
};

/// "p/q" or an integer; decimal literals are rejected.
Rational parse_exact(const std::string& text);
/// Comma-separated list of parse_exact values.
std::vector<Rational> parse_exact_list(const std::string& text);

/// S_{k,0} as "e-1", "1-e/3", "3e/8-1", ...
std::string table_form(const ExpLinear& v);

OutputRecord cmd_skj(long k, long j, unsigned digits, bool check);
OutputRecord cmd_ak(long k, unsigned digits);
OutputRecord cmd_skx(long k, const std::string& nodes, unsigned digits);
TableRecord cmd_table(long max_k);

struct VerifyArgs {
    long k = 0;
    std::optional<long> j;
    std::optional<std::string> nodes;
    unsigned depth = 60;
    std::string tolerance = "1e-10";
    std::string mode = "auto";
    unsigned digits = 15;
};
OutputRecord cmd_verify(const VerifyArgs& args);

struct GklArgs {
    std::string series;
    long k = 0;
    long ell = 0;
    std::string nodes;
    unsigned digits = 15;
    unsigned depth = 60;
    bool verify = false;
    std::string tolerance = "1e-12";
};
OutputRecord cmd_gkl(const GklArgs& args);

std::string to_text(const OutputRecord& r);
std::string to_text(const TableRecord& t);
std::string to_json(const OutputRecord& r);
std::string to_json(const TableRecord& t);
/// Inverse of to_json(const OutputRecord&).
OutputRecord record_from_json(const std::string& text);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mfs::cli
