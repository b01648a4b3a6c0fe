#pragma once

#include "bwc/bigint.hpp"
#include "bwc/tables.hpp"

#include <string>
#include <vector>

namespace bwc {

enum class PaperTable { I, II, III, IV, V, VI };
enum class TableFormat { Markdown, Csv, Json };

struct TableOptions {
    TableFormat format = TableFormat::Markdown;
    double sdp_tol = 1e-8;
    bool progress = false;       // per-cell lines on stderr
};

struct TableCell {
    int n = 0, w = 0;
    BigInt lower, upper;
    std::string lower_rule, upper_rule;
    bool exact_by_expurgation = false;
    bool starred = false;        // bound beats the class-sum value
    std::string text;
};

struct TableResult {
    PaperTable which;
    int d = 0;
    std::vector<TableCell> cells;
    std::vector<std::pair<int, BigInt>> a_column;   // per-row A(n,d) upper
    std::string document;
};

PaperTable parse_table_name(const std::string& s);

// Regenerates one of the six published tables cell by cell: the first three
// as certified intervals from the bound combiner, the last three as
// integer bounds from the symmetry-reduced SDP with expurgation-exact cells
// flagged. Deterministic output for a fixed configuration.
TableResult run_table(PaperTable which, const KnownTable& t, const TableOptions& opts = {});

}  // namespace bwc
