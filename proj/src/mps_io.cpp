#include "dpsimplex/mps_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dpsimplex {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

double parse_number(const std::string& tok, int line) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size())
    throw ParseError("expected a number, got '" + tok + "'", line);
  if (std::isnan(v)) throw ParseError("NaN value", line);
  return v;
}

enum class Section {
  None,
  ObjSense,
  Rows,
  Columns,
  Rhs,
  Ranges,
  Bounds,
  Done,
};

struct RowRef {
  bool objective = false;
  int index = -1;
};

}  // namespace

MpsReadResult parse_mps_text(const std::string& text,
                             const std::string& name_hint) {
  MpsReadResult res;
  GeneralLP& lp = res.lp;
  lp.name = name_hint;

  std::unordered_map<std::string, RowRef> row_map;
  std::unordered_map<std::string, int> col_map;
  // Per column: rows already holding a coefficient (-1 = objective), to
  // detect duplicate pairs. Maps row ref to entry position.
  std::vector<std::unordered_map<int, int>> seen;
  std::vector<char> lower_explicit;
  std::vector<char> rhs_set;
  bool have_objective = false;
  bool objective_constant_set = false;

  auto warn = [&](int line, std::string msg) {
    res.warnings.push_back(MpsWarning{line, std::move(msg)});
  };

  Section sec = Section::None;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (sec != Section::Done && std::getline(in, raw)) {
    ++ln;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    if (raw[0] == '*') continue;
    const bool header = !std::isspace(static_cast<unsigned char>(raw[0]));
    std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) continue;

    if (header) {
      const std::string key = upper(tok[0]);
      if (key == "NAME") {
        if (tok.size() > 1) lp.name = tok[1];
        continue;
      }
      if (key == "OBJSENSE") {
        sec = Section::ObjSense;
        if (tok.size() > 1) {
          const std::string v = upper(tok[1]);
          lp.maximize = v == "MAX" || v == "MAXIMIZE";
        }
        continue;
      }
      if (key == "ROWS") { sec = Section::Rows; continue; }
      if (key == "COLUMNS") { sec = Section::Columns; continue; }
      if (key == "RHS") { sec = Section::Rhs; continue; }
      if (key == "RANGES") { sec = Section::Ranges; continue; }
      if (key == "BOUNDS") { sec = Section::Bounds; continue; }
      if (key == "ENDATA") { sec = Section::Done; break; }
      throw ParseError("unknown section '" + tok[0] + "'", ln);
    }

    switch (sec) {
      case Section::None:
        throw ParseError("data before any section header", ln);
      case Section::Done:
        break;
      case Section::ObjSense: {
        const std::string v = upper(tok[0]);
        if (v == "MAX" || v == "MAXIMIZE")
          lp.maximize = true;
        else if (v == "MIN" || v == "MINIMIZE")
          lp.maximize = false;
        else
          throw ParseError("bad OBJSENSE value '" + tok[0] + "'", ln);
        break;
      }
      case Section::Rows: {
        if (tok.size() != 2)
          throw ParseError("ROWS line needs a type and a name", ln);
        const std::string type = upper(tok[0]);
        const std::string& name = tok[1];
        if (row_map.count(name))
          throw ParseError("duplicate row name '" + name + "'", ln);
        if (type == "N") {
          if (!have_objective) {
            have_objective = true;
            row_map[name] = RowRef{true, -1};
          } else {
            warn(ln, "extra non-binding row '" + name +
                         "' kept outside the constraint set");
            lp.rows.push_back(GeneralRow{name, RowType::NonBinding, 0.0,
                                         false, 0.0});
            row_map[name] =
                RowRef{false, static_cast<int>(lp.rows.size()) - 1};
          }
        } else {
          RowType rt;
          if (type == "L")
            rt = RowType::LessEqual;
          else if (type == "G")
            rt = RowType::GreaterEqual;
          else if (type == "E")
            rt = RowType::Equal;
          else
            throw ParseError("unknown row type '" + tok[0] + "'", ln);
          lp.rows.push_back(GeneralRow{name, rt, 0.0, false, 0.0});
          row_map[name] = RowRef{false, static_cast<int>(lp.rows.size()) - 1};
        }
        break;
      }
      case Section::Columns: {
        if (tok.size() >= 2 && tok[1] == "'MARKER'") {
          bool intorg = false, intend = false;
          for (const std::string& t : tok) {
            if (t == "'INTORG'") intorg = true;
            if (t == "'INTEND'") intend = true;
          }
          if (intorg)
            throw UnsupportedError(
                "integer columns (MARKER INTORG) are not supported");
          if (intend) {
            warn(ln, "stray INTEND marker ignored");
            break;
          }
        }
        if (tok.size() < 3 || tok.size() % 2 == 0)
          throw ParseError("COLUMNS line needs a column and row/value pairs",
                           ln);
        const std::string& cname = tok[0];
        int ci;
        auto it = col_map.find(cname);
        if (it == col_map.end()) {
          ci = static_cast<int>(lp.columns.size());
          lp.columns.push_back(GeneralColumn{cname, 0.0, Bounds{}, {}});
          col_map.emplace(cname, ci);
          seen.emplace_back();
          lower_explicit.push_back(0);
        } else {
          ci = it->second;
        }
        for (size_t k = 1; k + 1 < tok.size(); k += 2) {
          auto rit = row_map.find(tok[k]);
          if (rit == row_map.end())
            throw ParseError("unknown row '" + tok[k] + "'", ln);
          const double v = parse_number(tok[k + 1], ln);
          const int key = rit->second.objective ? -1 : rit->second.index;
          auto sit = seen[ci].find(key);
          if (sit != seen[ci].end()) {
            warn(ln, "duplicate coefficient for column '" + cname +
                         "' in row '" + tok[k] + "' summed");
            if (key == -1)
              lp.columns[ci].cost += v;
            else
              lp.columns[ci].entries[sit->second].value += v;
          } else if (key == -1) {
            lp.columns[ci].cost += v;
            seen[ci].emplace(key, -1);
          } else {
            lp.columns[ci].entries.push_back(Entry{key, v});
            seen[ci].emplace(
                key, static_cast<int>(lp.columns[ci].entries.size()) - 1);
          }
        }
        break;
      }
      case Section::Rhs:
      case Section::Ranges: {
        size_t first = tok.size() % 2 == 1 ? 1 : 0;
        if (first == 0)
          warn(ln, "line without a set name");
        if (tok.size() < first + 2)
          throw ParseError("expected row/value pairs", ln);
        if (rhs_set.size() < lp.rows.size()) rhs_set.resize(lp.rows.size(), 0);
        for (size_t k = first; k + 1 < tok.size(); k += 2) {
          auto rit = row_map.find(tok[k]);
          if (rit == row_map.end())
            throw ParseError("unknown row '" + tok[k] + "'", ln);
          const double v = parse_number(tok[k + 1], ln);
          if (sec == Section::Rhs) {
            if (rit->second.objective) {
              // The objective row's right-hand side is the negated constant
              // term of the objective function.
              if (objective_constant_set)
                warn(ln, "objective constant overwritten");
              lp.objective_constant = -v;
              objective_constant_set = true;
            } else {
              if (rhs_set[rit->second.index])
                warn(ln, "rhs of row '" + tok[k] + "' overwritten");
              lp.rows[rit->second.index].rhs = v;
              rhs_set[rit->second.index] = 1;
            }
          } else {
            if (rit->second.objective ||
                lp.rows[rit->second.index].type == RowType::NonBinding) {
              warn(ln, "range on a non-binding row ignored");
            } else {
              lp.rows[rit->second.index].has_range = true;
              lp.rows[rit->second.index].range = v;
            }
          }
        }
        break;
      }
      case Section::Bounds: {
        if (tok.size() < 3)
          throw ParseError("BOUNDS line needs type, set and column", ln);
        const std::string type = upper(tok[0]);
        if (type == "BV" || type == "LI" || type == "UI")
          throw UnsupportedError("integer bound type " + type +
                                 " is not supported");
        const std::string& cname = tok[2];
        auto cit = col_map.find(cname);
        if (cit == col_map.end())
          throw ParseError("bound on unknown column '" + cname + "'", ln);
        Bounds& b = lp.columns[cit->second].bounds;
        const bool needs_value = type == "LO" || type == "UP" || type == "FX";
        if (needs_value && tok.size() < 4)
          throw ParseError("bound type " + type + " needs a value", ln);
        if (type == "LO") {
          b.lower = parse_number(tok[3], ln);
          lower_explicit[cit->second] = 1;
        } else if (type == "UP") {
          b.upper = parse_number(tok[3], ln);
          if (b.upper < 0.0 && !lower_explicit[cit->second] &&
              b.lower == 0.0)
            warn(ln,
                 "negative upper bound on '" + cname +
                     "' with default lower bound kept at zero");
        } else if (type == "FX") {
          b.lower = b.upper = parse_number(tok[3], ln);
          lower_explicit[cit->second] = 1;
        } else if (type == "FR") {
          b.lower = -kInf;
          b.upper = kInf;
          lower_explicit[cit->second] = 1;
        } else if (type == "MI") {
          b.lower = -kInf;
          lower_explicit[cit->second] = 1;
        } else if (type == "PL") {
          b.upper = kInf;
        } else {
          throw ParseError("unknown bound type '" + tok[0] + "'", ln);
        }
        break;
      }
    }
  }
  if (sec != Section::Done)
    res.warnings.push_back(MpsWarning{ln, "file ended without ENDATA"});
  if (!have_objective)
    throw ParseError("no objective (N) row declared", ln == 0 ? 1 : ln);
  return res;
}

namespace {

std::string inflate_gzip(const std::string& raw) {
  z_stream zs{};
  // 15 window bits + 32: auto-detect zlib or gzip wrapping.
  if (inflateInit2(&zs, 15 + 32) != Z_OK)
    throw Error("zlib initialization failed");
  std::string out;
  out.reserve(raw.size() * 4);
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(raw.data()));
  zs.avail_in = static_cast<uInt>(raw.size());
  char buf[1 << 16];
  int rc;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof buf;
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw Error("gzip decompression failed (zlib rc " + std::to_string(rc) +
                  ")");
    }
    out.append(buf, sizeof buf - zs.avail_out);
  } while (rc != Z_STREAM_END && (zs.avail_in > 0 || zs.avail_out == 0));
  inflateEnd(&zs);
  if (rc != Z_STREAM_END) throw Error("truncated gzip stream");
  return out;
}

std::string basename_no_ext(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

MpsReadResult read_mps(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  std::string raw((std::istreambuf_iterator<char>(f)),
                  std::istreambuf_iterator<char>());
  if (raw.size() >= 2 && static_cast<unsigned char>(raw[0]) == 0x1f &&
      static_cast<unsigned char>(raw[1]) == 0x8b)
    raw = inflate_gzip(raw);
  return parse_mps_text(raw, basename_no_ext(path));
}

std::string write_mps(const StandardFormLP& lp) {
  std::ostringstream os;
  char buf[64];
  os << "NAME " << (lp.name().empty() ? "MODEL" : lp.name()) << "\n";
  os << "ROWS\n N COST\n";
  for (int i = 0; i < lp.num_rows(); ++i) os << " E R" << i << "\n";
  os << "COLUMNS\n";
  for (int j = 0; j < lp.num_cols(); ++j) {
    if (lp.cost()[j] != 0.0) {
      std::snprintf(buf, sizeof buf, "%.17g", lp.cost()[j]);
      os << "    X" << j << " COST " << buf << "\n";
    }
    for (const Entry& e : lp.col(j)) {
      std::snprintf(buf, sizeof buf, "%.17g", e.value);
      os << "    X" << j << " R" << e.row << " " << buf << "\n";
    }
  }
  os << "RHS\n";
  for (int i = 0; i < lp.num_rows(); ++i) {
    if (lp.rhs()[i] == 0.0) continue;
    std::snprintf(buf, sizeof buf, "%.17g", lp.rhs()[i]);
    os << "    RHS R" << i << " " << buf << "\n";
  }
  os << "ENDATA\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Presolve
// ---------------------------------------------------------------------------

PresolveResult presolve(const GeneralLP& in) {
  PresolveResult out;

  std::vector<GeneralRow> rows = in.rows;
  struct WCol {
    std::string name;
    double cost = 0.0;
    Bounds b;
    std::vector<Entry> entries;
    bool live = true;
  };
  std::vector<WCol> cols(in.columns.size());
  for (size_t j = 0; j < in.columns.size(); ++j) {
    const GeneralColumn& c = in.columns[j];
    cols[j] = WCol{c.name, c.cost, c.bounds, {}, true};
    for (const Entry& e : c.entries)
      if (e.value != 0.0) cols[j].entries.push_back(e);
  }
  std::vector<char> row_live(rows.size(), 1);
  double extra_constant = 0.0;

  auto fail = [&](std::string msg) {
    out.infeasible = true;
    out.message = std::move(msg);
    out.reduced = in;
  };

  bool changed = true;
  while (changed && !out.infeasible) {
    changed = false;
    for (WCol& c : cols) {
      if (!c.live) continue;
      if (c.b.lower > c.b.upper) {
        fail("column '" + c.name + "' has lower bound above upper bound");
        break;
      }
      const bool fixed = c.b.lower == c.b.upper && std::isfinite(c.b.lower);
      int live_entries = 0;
      for (const Entry& e : c.entries)
        if (row_live[e.row]) ++live_entries;
      if (fixed) {
        const double v = c.b.lower;
        for (const Entry& e : c.entries)
          if (row_live[e.row]) rows[e.row].rhs -= e.value * v;
        extra_constant += c.cost * v;
        out.fixed_columns.emplace_back(c.name, v);
        c.live = false;
        changed = true;
      } else if (live_entries == 0 && c.cost == 0.0) {
        // Free to sit anywhere feasible; pick the simplest bound.
        double v = 0.0;
        if (std::isfinite(c.b.lower))
          v = c.b.lower;
        else if (std::isfinite(c.b.upper))
          v = c.b.upper;
        out.fixed_columns.emplace_back(c.name, v);
        c.live = false;
        changed = true;
      }
    }
    if (out.infeasible) break;

    std::vector<int> count(rows.size(), 0);
    for (const WCol& c : cols) {
      if (!c.live) continue;
      for (const Entry& e : c.entries)
        if (row_live[e.row]) ++count[e.row];
    }
    for (size_t r = 0; r < rows.size(); ++r) {
      if (!row_live[r] || count[r] > 0) continue;
      if (rows[r].type == RowType::NonBinding) continue;
      const RowBounds rb = row_bounds(rows[r]);
      const double tol = 1e-9 * (1.0 + std::abs(rows[r].rhs));
      if (rb.lo <= tol && rb.hi >= -tol) {
        row_live[r] = 0;
        out.dropped_rows.push_back(rows[r].name);
        changed = true;
      } else {
        fail("empty row '" + rows[r].name +
             "' cannot reach its right-hand side");
        break;
      }
    }
  }
  if (out.infeasible) return out;

  // Materialize the reduced model with compacted indices.
  GeneralLP red;
  red.name = in.name;
  red.maximize = in.maximize;
  red.objective_constant = in.objective_constant + extra_constant;
  std::vector<int> new_row(rows.size(), -1);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!row_live[r]) continue;
    new_row[r] = static_cast<int>(red.rows.size());
    red.rows.push_back(rows[r]);
  }
  for (const WCol& c : cols) {
    if (!c.live) continue;
    GeneralColumn gc{c.name, c.cost, c.b, {}};
    for (const Entry& e : c.entries)
      if (row_live[e.row]) gc.entries.push_back(Entry{new_row[e.row], e.value});
    red.columns.push_back(std::move(gc));
  }
  out.reduced = std::move(red);
  return out;
}

std::vector<double> PresolveResult::postsolve(
    const GeneralLP& original, std::span<const double> reduced_x) const {
  if (reduced_x.size() != reduced.columns.size())
    throw ValidationError("reduced point length does not match reduced model");
  std::unordered_map<std::string, double> fixed(fixed_columns.begin(),
                                                fixed_columns.end());
  std::unordered_map<std::string, int> index;
  for (size_t j = 0; j < reduced.columns.size(); ++j)
    index.emplace(reduced.columns[j].name, static_cast<int>(j));
  std::vector<double> x(original.columns.size(), 0.0);
  for (size_t j = 0; j < original.columns.size(); ++j) {
    const std::string& name = original.columns[j].name;
    auto fit = fixed.find(name);
    if (fit != fixed.end()) {
      x[j] = fit->second;
      continue;
    }
    auto iit = index.find(name);
    if (iit == index.end())
      throw ValidationError("column '" + name +
                            "' missing from the reduced model");
    x[j] = reduced_x[iit->second];
  }
  return x;
}

}  // namespace dpsimplex
