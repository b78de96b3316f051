#include "quintic/tables.hpp"

#include <algorithm>

#include "quintic/errors.hpp"
#include "quintic/genus.hpp"

namespace quintic {

namespace {

const std::vector<PrintedRow> kTable1 = {
    {7, 7, 43, -7, 301, 5, 1},        {7, 7, 193, -7, 1351, 5, 1},     {7, 7, 293, -7, 2051, 5, 1},
    {107, 7, 43, -7, 4601, 5, 1},     {157, 7, 43, -7, 6751, 5, 1},    {457, 7, 43, -7, 19651, 5, 1},
    {107, 7, 193, -7, 20651, 5, 1},   {557, 7, 43, -7, 23251, 5, 1},   {607, 7, 43, -7, 26101, 5, 1},
    {157, 7, 193, -7, 30301, 5, 1},   {107, 7, 293, -7, 31351, 5, 1},  {757, 7, 43, -7, 32551, 5, 1},
    {857, 7, 43, -7, 36851, 5, 1},    {907, 7, 43, -7, 39001, 5, 1},   {107, 7, 443, -7, 47401, 5, 1},
    {257, 7, 193, -7, 49601, 5, 1},   {307, 7, 193, -7, 59251, 5, 1},  {157, 7, 443, -7, 69551, 5, 1},
    {257, 7, 293, -7, 75301, 5, 1},   {457, 7, 443, -7, 202451, 5, 1},
};

const std::vector<PrintedRow> kTable2 = {
    {7, 7, {}, {}, 35, 5, 1},      {43, -7, {}, {}, 215, 5, 1},   {107, 7, {}, {}, 535, 5, 1},
    {157, 7, {}, {}, 785, 5, 1},   {193, -7, {}, {}, 965, 5, 1},  {257, 7, {}, {}, 1285, 5, 1},
    {293, -7, {}, {}, 1465, 5, 1}, {307, 7, {}, {}, 1535, 5, 1},  {443, -7, {}, {}, 2215, 5, 1},
    {457, 7, {}, {}, 2285, 5, 1},  {557, 7, {}, {}, 2785, 5, 1},  {607, 7, {}, {}, 3053, 5, 1},
    {643, -7, {}, {}, 3215, 5, 1}, {757, 7, {}, {}, 3785, 5, 1},  {857, 7, {}, {}, 4285, 5, 1},
    {907, 7, {}, {}, 4535, 5, 1},
};

const std::vector<PrintedRow> kTable3 = {
    {2, 2, 3, 3, 30, 5, 1},          {7, 7, 3, 3, 105, 5, 1},         {2, 2, 13, 13, 130, 5, 1},
    {2, 2, 23, -2, 230, 5, 1},       {17, 17, 3, 3, 255, 5, 1},       {2, 2, 53, 3, 530, 5, 1},
    {37, 17, 3, 3, 555, 5, 1},       {47, -3, 3, 3, 705, 5, 1},       {67, 17, 3, 3, 1005, 5, 1},
    {17, 17, 23, -2, 1955, 5, 1},    {37, 17, 13, 13, 2405, 5, 1},    {47, -3, 13, 13, 3055, 5, 1},
    {47, -3, 23, -2, 5405, 5, 1},    {47, -3, 43, -7, 10105, 5, 1},   {107, 7, 23, -2, 12305, 5, 1},
    {67, 17, 53, 3, 17755, 5, 1},    {97, -3, 43, -7, 20855, 5, 1},
};

const char* kTitles[] = {"n = q1*q2 with q1, q2 = +-7 mod 25", "n = 5*q1 with q1 = +-7 mod 25",
                         "n = 5*q1*q2 with q1 or q2 != +-7 mod 25"};

void check_cell(std::vector<Erratum>& errata, const std::string& column, const std::string& printed,
                const std::string& computed) {
  if (printed != computed) errata.push_back({column, printed, computed});
}

}  // namespace

int signed_mod25(const Integer& q) {
  int r = static_cast<int>(mpz_fdiv_ui(q.get_mpz_t(), 25));
  return r > 17 ? r - 25 : r;
}

const std::vector<PrintedRow>& printed_rows(int which) {
  switch (which) {
    case 1: return kTable1;
    case 2: return kTable2;
    case 3: return kTable3;
    default: throw Error(ErrorKind::kInvalidInput, "table must be 1, 2 or 3, got " + std::to_string(which));
  }
}

Table regenerate_table(int which, const Config& cfg) {
  Table table;
  table.which = which;
  const auto& rows = printed_rows(which);
  table.title = kTitles[which - 1];
  for (const auto& printed : rows) {
    TableRow row;
    row.q1 = printed.q1;
    row.q1_mod25 = signed_mod25(row.q1);
    row.n = row.q1;
    if (printed.q2) {
      row.q2 = Integer(*printed.q2);
      row.q2_mod25 = signed_mod25(*row.q2);
      row.n *= *row.q2;
    }
    if (which != 1) row.n *= 5;

    auto c = classify(row.n, cfg);
    row.form = c.form;
    auto prediction = GenusAnalyzer::predict_theorem(c);
    row.h_k5 = *prediction.h_k5;
    row.h_gamma5 = *prediction.h_gamma5;

    check_cell(row.errata, "q1_mod25", std::to_string(printed.q1_mod25), std::to_string(row.q1_mod25));
    if (printed.q2_mod25)
      check_cell(row.errata, "q2_mod25", std::to_string(*printed.q2_mod25), std::to_string(*row.q2_mod25));
    check_cell(row.errata, "n", std::to_string(printed.n), row.n.get_str());
    check_cell(row.errata, "h_k5", std::to_string(printed.h_k5), std::to_string(row.h_k5));
    check_cell(row.errata, "h_gamma5", std::to_string(printed.h_gamma5), std::to_string(row.h_gamma5));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<Erratum> distinct_errata(const std::vector<Table>& tables) {
  std::vector<Erratum> out;
  for (const auto& t : tables)
    for (const auto& row : t.rows)
      for (const auto& e : row.errata) {
        bool seen = std::any_of(out.begin(), out.end(), [&](const Erratum& o) {
          return o.column == e.column && o.printed == e.printed && o.corrected == e.corrected;
        });
        if (!seen) out.push_back(e);
      }
  return out;
}

}  // namespace quintic
