#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quintic/classify.hpp"

namespace quintic {

// A row as printed: the prime columns and the printed derived columns.
struct PrintedRow {
  long q1;
  int q1_mod25;
  std::optional<long> q2;
  std::optional<int> q2_mod25;
  long n;
  int h_k5;
  int h_gamma5;
};

struct Erratum {
  std::string column;
  std::string printed;
  std::string corrected;
};

struct TableRow {
  Integer q1;
  int q1_mod25 = 0;
  std::optional<Integer> q2;
  std::optional<int> q2_mod25;
  Integer n;
  Form form = Form::kUnsupported;
  int h_k5 = 0;
  int h_gamma5 = 0;
  std::vector<Erratum> errata;
};

struct Table {
  int which = 0;
  std::string title;
  std::vector<TableRow> rows;
};

// Residue in [-7, 17], the convention of the printed mod 25 columns.
int signed_mod25(const Integer& q);

const std::vector<PrintedRow>& printed_rows(int which);

// Recomputes n, the mod 25 columns and the theorem-mode predictions for
// each printed (q1, q2), annotating every cell that differs from print.
Table regenerate_table(int which, const Config& cfg = {});

// Distinct (column, printed, corrected) errata across all three tables.
std::vector<Erratum> distinct_errata(const std::vector<Table>& tables);

}  // namespace quintic
