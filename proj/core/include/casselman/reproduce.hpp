#pragma once

#include <string>
#include <vector>

#include "casselman/laurent.hpp"
#include "casselman/weyl.hpp"

namespace casselman {

// One published row as printed: words are 1-based digit strings.
struct ReferenceFigureRow {
  std::string u;
  std::string v;
  LaurentQ c;
  bool precedes = false;
  std::string note;  // nonempty when the printed row carries an anomaly
};

struct ReferenceAdRow {
  std::string u;
  std::string v;
  std::string t;
  LaurentQ P;
  LaurentQ Q;
};

// Published A4 table of pairs u < v with nonzero c_{u,v}, in printed order
// (left column pair, then right column pair, line by line).
const std::vector<ReferenceFigureRow>& reference_figure1();
// Published A3 table of (u, v, t) triples where the simply-laced recursion fails.
const std::vector<ReferenceAdRow>& reference_a3_adtable();

struct FigureRow {
  ElementIndex u = 0;
  ElementIndex v = 0;
  LaurentQ c;
  bool precedes = false;
};

struct Figure1Report {
  std::string system;
  std::size_t comparable_pairs = 0;
  std::vector<FigureRow> rows;        // computed, canonical order
  std::vector<FigureRow> reference_view;  // reference rows resolved, printed order
  std::size_t precedes_count = 0;
  // Precedes-marked rows whose c differs from q^-1 - q^-2.
  std::vector<FigureRow> precedes_other_c;
  bool matches_reference = false;  // computed and reference rows agree as multisets
  std::vector<std::string> notes;
};

// Every pair u < v with c_{u,v} != 0, the precedes mark, and a comparison
// against the reference table. Rows sort by (l(u), l(v), u, v) with elements
// in their dense (length, canonical form) order.
Figure1Report reproduce_figure1(const WeylGroup& group);

struct AdTableRow {
  ElementIndex u = 0;
  ElementIndex v = 0;
  ElementIndex t = 0;
  LaurentQ P;
  LaurentQ Q;
};

struct AdTableReport {
  std::string system;
  std::vector<AdTableRow> rows;  // canonical order
  std::vector<AdTableRow> reference_view;
  bool matches_reference = false;
  std::vector<std::string> notes;
};

// Failing triples of the simply-laced recursion (symbolic, exhaustive).
AdTableReport reproduce_a3_adtable(const WeylGroup& group);

}  // namespace casselman
