#pragma once

// Structured output records for the CLI: one record per filling, serialized
// as an aligned table, JSON Lines, or CSV with a fixed column order.
// Integers that do not fit in 64 bits are emitted as decimal strings; the
// per-record flag "bigint_strings" says whether that happened, so consumers
// with fixed-width integers know to look.

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lensfill/fillings.hpp"
#include "lensfill/theorems.hpp"

namespace lensfill {

inline constexpr int kRecordSchema = 1;

struct OutputRecord {
  int schema = kRecordSchema;
  Int p;
  Int q;
  Int q_canonical;
  Tuple cap;
  ZeroTuple tuple;
  Int b2;
  Int pi1;
  std::optional<ExtremalForm> extremal;
  Int len;  // of p/q; derived from the cap, so astronomically long expansions need not be materialized
  Int U;
  Int V;
};

inline bool operator==(const OutputRecord& a, const OutputRecord& b) {
  return a.schema == b.schema && a.p == b.p && a.q == b.q &&
         a.q_canonical == b.q_canonical && a.cap == b.cap && a.tuple == b.tuple &&
         a.b2 == b.b2 && a.pi1 == b.pi1 && a.extremal == b.extremal &&
         a.len == b.len && a.U == b.U && a.V == b.V;
}

inline OutputRecord make_record(const Filling& f) {
  OutputRecord r;
  r.p = f.lens.p;
  r.q = f.lens.q;
  r.q_canonical = lens_canonical(f.lens).q;
  r.cap = f.cap;
  r.tuple = f.tuple;
  r.b2 = f.b2;
  r.pi1 = f.pi1;
  r.extremal = f.extremal;
  r.len = cf_U(f.cap) + 1;              // len(p/q) = U(p/(p-q)) + 1
  r.U = Int(f.cap.size()) - 1;          // U(p/q) = len(p/(p-q)) - 1
  r.V = r.len + r.U;
  return r;
}

template <typename E>
std::string join(const std::vector<E>& t, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << sep;
    os << t[i];
  }
  return os.str();
}

template <typename E>
std::string format_tuple(const std::vector<E>& t) {
  return "(" + join(t, ",") + ")";
}

// --- JSON ---

inline nlohmann::json json_int(const Int& v, bool& used_string) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  used_string = true;
  return v.get_str();
}

inline Int json_to_int(const nlohmann::json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  throw std::invalid_argument("expected an integer or a decimal string");
}

inline nlohmann::json record_to_json(const OutputRecord& r) {
  bool big = false;
  nlohmann::json j;
  j["schema"] = r.schema;
  j["p"] = json_int(r.p, big);
  j["q"] = json_int(r.q, big);
  j["q_canonical"] = json_int(r.q_canonical, big);
  nlohmann::json cap = nlohmann::json::array();
  for (const Int& x : r.cap) cap.push_back(json_int(x, big));
  j["cap"] = std::move(cap);
  j["tuple"] = r.tuple;
  j["b2"] = json_int(r.b2, big);
  j["pi1"] = json_int(r.pi1, big);
  if (r.extremal) {
    j["extremal"] = {{"n", json_int(r.extremal->n, big)},
                     {"d", json_int(r.extremal->d, big)},
                     {"c", json_int(r.extremal->c, big)}};
  } else {
    j["extremal"] = nullptr;
  }
  j["len"] = json_int(r.len, big);
  j["U"] = json_int(r.U, big);
  j["V"] = json_int(r.V, big);
  j["bigint_strings"] = big;
  return j;
}

inline OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.schema = j.at("schema").get<int>();
  r.p = json_to_int(j.at("p"));
  r.q = json_to_int(j.at("q"));
  r.q_canonical = json_to_int(j.at("q_canonical"));
  for (const auto& x : j.at("cap")) r.cap.push_back(json_to_int(x));
  r.tuple = j.at("tuple").get<ZeroTuple>();
  r.b2 = json_to_int(j.at("b2"));
  r.pi1 = json_to_int(j.at("pi1"));
  if (!j.at("extremal").is_null()) {
    const auto& e = j.at("extremal");
    r.extremal = ExtremalForm{json_to_int(e.at("n")), json_to_int(e.at("d")),
                              json_to_int(e.at("c"))};
  }
  r.len = json_to_int(j.at("len"));
  r.U = json_to_int(j.at("U"));
  r.V = json_to_int(j.at("V"));
  return r;
}

// --- CSV ---

// Fixed column order; cap and tuple cells are space-joined digit lists.
inline std::string record_csv_header() {
  return "p,q,q_canonical,cap,tuple,b2,pi1,extremal_n,extremal_d,extremal_c,len,U,V";
}

inline std::string record_to_csv(const OutputRecord& r) {
  std::ostringstream os;
  os << r.p << ',' << r.q << ',' << r.q_canonical << ',' << join(r.cap, " ") << ','
     << join(r.tuple, " ") << ',' << r.b2 << ',' << r.pi1 << ',';
  if (r.extremal)
    os << r.extremal->n << ',' << r.extremal->d << ',' << r.extremal->c;
  else
    os << ",,";
  os << ',' << r.len << ',' << r.U << ',' << r.V;
  return os.str();
}

// --- table ---

inline std::string render_records_table(const std::vector<OutputRecord>& records) {
  static const char* headers[] = {"p",  "q",   "q_can", "cap", "tuple", "b2",
                                  "pi1", "extremal", "len", "U", "V"};
  constexpr std::size_t ncols = sizeof(headers) / sizeof(headers[0]);
  std::vector<std::vector<std::string>> rows;
  for (const OutputRecord& r : records) {
    std::string ext = "-";
    if (r.extremal) {
      std::ostringstream os;
      os << "n=" << r.extremal->n << ",d=" << r.extremal->d << ",c=" << r.extremal->c;
      ext = os.str();
    }
    auto str = [](const Int& v) { return v.get_str(); };
    rows.push_back({str(r.p), str(r.q), str(r.q_canonical), format_tuple(r.cap),
                    format_tuple(r.tuple), str(r.b2), str(r.pi1), ext, str(r.len),
                    str(r.U), str(r.V)});
  }
  std::vector<std::size_t> width(ncols);
  for (std::size_t c = 0; c < ncols; ++c) width[c] = std::string(headers[c]).size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < ncols; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (std::size_t c = 0; c < ncols; ++c)
    os << std::left << std::setw(static_cast<int>(width[c]) + 2) << headers[c];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < ncols; ++c)
      os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
    os << '\n';
  }
  return os.str();
}

// --- scan reports ---

inline nlohmann::json witness_to_json(const Witness& w) {
  bool big = false;
  nlohmann::json j;
  j["p"] = json_int(w.p, big);
  j["q"] = json_int(w.q, big);
  j["tuple"] = w.tuple;
  j["detail"] = w.detail;
  return j;
}

inline nlohmann::json report_to_json(const ScanReport& r) {
  nlohmann::json j;
  j["schema"] = kRecordSchema;
  j["check"] = r.check;
  j["bound"] = r.bound;
  j["checked"] = r.checked;
  j["ok"] = r.ok();
  j["violations"] = nlohmann::json::array();
  for (const Witness& w : r.violations) j["violations"].push_back(witness_to_json(w));
  j["equality_cases"] = nlohmann::json::array();
  for (const Witness& w : r.equality_cases) j["equality_cases"].push_back(witness_to_json(w));
  return j;
}

inline std::string report_text(const ScanReport& r, bool list_equality = true) {
  std::ostringstream os;
  os << "check=" << r.check << " bound=" << r.bound << " checked=" << r.checked
     << " violations=" << r.violations.size() << " equality_cases="
     << r.equality_cases.size() << " : " << (r.ok() ? "PASS" : "FAIL") << '\n';
  for (const Witness& w : r.violations) os << "  violation: " << w.detail << '\n';
  if (list_equality)
    for (const Witness& w : r.equality_cases) os << "  equality: " << w.detail << '\n';
  return os.str();
}

}  // namespace lensfill
