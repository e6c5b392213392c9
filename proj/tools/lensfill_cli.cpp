// lensfill: continued fractions, admissible zero tuples, minimal symplectic
// fillings of lens spaces, and brute-force verification sweeps.
//
// Exit codes: 0 success, 1 a verification sweep found a violation, 2 usage or
// input error.  Internal invariant failures (bugs) exit 3.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lensfill/lensfill.hpp"

namespace {

using lensfill::Int;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("not an integer: '" + s + "'");
  }
}

lensfill::LensSpace parse_lens(const std::string& ps, const std::string& qs) {
  Int p = parse_int(ps);
  Int q = parse_int(qs);
  try {
    return lensfill::make_lens(std::move(p), std::move(q));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Int> parse_tuple_arg(const std::string& s) {
  std::vector<Int> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (item.empty()) throw UsageError("empty tuple entry");
    Int v = parse_int(item);
    if (v < 0) throw UsageError("tuple entries must be >= 0");
    out.push_back(std::move(v));
  }
  if (out.empty()) throw UsageError("empty tuple");
  return out;
}

int run_cf(const std::string& ps, const std::string& qs, const std::string& eval_str,
           const std::string& format) {
  if (!eval_str.empty()) {
    auto t = parse_tuple_arg(eval_str);
    auto v = lensfill::cf_eval(t);
    if (format == "json") {
      bool big = false;
      nlohmann::json j;
      j["schema"] = lensfill::kRecordSchema;
      nlohmann::json arr = nlohmann::json::array();
      for (const Int& x : t) arr.push_back(lensfill::json_int(x, big));
      j["tuple"] = std::move(arr);
      j["value"] = v ? nlohmann::json(v->get_str()) : nlohmann::json(nullptr);
      j["bigint_strings"] = big;
      std::cout << j.dump() << '\n';
    } else if (format == "csv") {
      std::cout << "tuple,value\n" << lensfill::join(t, " ") << ',';
      if (v) std::cout << *v;
      else std::cout << "infinite";
      std::cout << '\n';
    } else {
      std::cout << lensfill::format_tuple(t) << " = ";
      if (v) std::cout << *v;
      else std::cout << "infinite";
      std::cout << '\n';
    }
    return 0;
  }

  if (ps.empty() || qs.empty())
    throw UsageError("cf needs p and q (or --eval TUPLE)");
  auto lens_like = parse_lens(ps, qs);  // enforces coprime p > q >= 1
  lensfill::Fraction f = lensfill::make_fraction(lens_like.p, lens_like.q);
  lensfill::Tuple t = lensfill::hj_expand(f);
  Int u = lensfill::cf_U(t);
  Int len = static_cast<long>(t.size());
  Int v = len + u;
  std::string word = lensfill::st_decompose(f);
  if (format == "json") {
    bool big = false;
    nlohmann::json j;
    j["schema"] = lensfill::kRecordSchema;
    j["p"] = lensfill::json_int(lens_like.p, big);
    j["q"] = lensfill::json_int(lens_like.q, big);
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& x : t) arr.push_back(lensfill::json_int(x, big));
    j["cf"] = std::move(arr);
    j["len"] = lensfill::json_int(len, big);
    j["U"] = lensfill::json_int(u, big);
    j["V"] = lensfill::json_int(v, big);
    j["word"] = word;
    j["bigint_strings"] = big;
    std::cout << j.dump() << '\n';
  } else if (format == "csv") {
    std::cout << "p,q,cf,len,U,V,word\n"
              << lens_like.p << ',' << lens_like.q << ',' << lensfill::join(t, " ") << ','
              << len << ',' << u << ',' << v << ',' << word << '\n';
  } else {
    std::cout << lens_like.p << '/' << lens_like.q << " = " << lensfill::format_tuple(t) << '\n'
              << "len=" << len << " U=" << u << " V=" << v << '\n'
              << "word=" << word << '\n';
  }
  return 0;
}

int run_zero_tuples(int k, bool count_only, const std::string& format) {
  std::vector<lensfill::ZeroTuple> tuples;
  try {
    tuples = lensfill::enumerate_zero_tuples(k);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (count_only) {
    if (format == "json")
      std::cout << nlohmann::json{{"k", k}, {"count", tuples.size()}}.dump() << '\n';
    else
      std::cout << tuples.size() << '\n';
    return 0;
  }
  if (format == "json") {
    for (const auto& t : tuples) std::cout << nlohmann::json{{"tuple", t}}.dump() << '\n';
  } else if (format == "csv") {
    std::cout << "tuple\n";
    for (const auto& t : tuples) std::cout << lensfill::join(t, " ") << '\n';
  } else {
    for (const auto& t : tuples) std::cout << lensfill::format_tuple(t) << '\n';
  }
  return 0;
}

int run_fillings(const std::string& ps, const std::string& qs, const std::string& format) {
  lensfill::LensSpace lens = parse_lens(ps, qs);
  std::vector<lensfill::OutputRecord> records;
  for (const lensfill::Filling& f : lensfill::fillings_of(lens))
    records.push_back(lensfill::make_record(f));
  if (format == "json") {
    for (const auto& r : records) std::cout << lensfill::record_to_json(r).dump() << '\n';
  } else if (format == "csv") {
    std::cout << lensfill::record_csv_header() << '\n';
    for (const auto& r : records) std::cout << lensfill::record_to_csv(r) << '\n';
  } else {
    std::cout << lensfill::render_records_table(records);
  }
  return 0;
}

int run_verify(const std::string& which, long p_max, int l_max, int jobs,
               const std::string& format) {
  static const std::vector<std::string> known{"thm-divisibility", "thm-length", "census-d2",
                                              "census-fib",      "fibonacci",  "identities"};
  std::vector<std::string> selected;
  if (which == "all") {
    selected = known;
  } else if (std::find(known.begin(), known.end(), which) != known.end()) {
    selected = {which};
  } else {
    throw UsageError("unknown check '" + which +
                     "'; expected one of thm-divisibility, thm-length, census-d2, "
                     "census-fib, fibonacci, identities, all");
  }
  if (p_max < 2) throw UsageError("--p-max must be >= 2");
  if (l_max < 1) throw UsageError("--l-max must be >= 1");
  if (jobs < 1) throw UsageError("--jobs must be >= 1");

  bool all_ok = true;
  if (format == "csv") std::cout << "check,bound,checked,violations,equality_cases,ok\n";
  for (const std::string& name : selected) {
    lensfill::ScanReport r;
    if (name == "thm-divisibility") r = lensfill::verify_divisibility_bound(p_max, jobs);
    else if (name == "thm-length") r = lensfill::verify_length_bound(p_max, jobs);
    else if (name == "census-d2") r = lensfill::equality_census_d2(p_max, jobs);
    else if (name == "census-fib") r = lensfill::equality_census_fib(p_max, jobs);
    else if (name == "fibonacci") r = lensfill::verify_fibonacci_extremal(l_max);
    else r = lensfill::verify_cf_identities(p_max, jobs);
    all_ok = all_ok && r.ok();
    if (format == "json") {
      std::cout << lensfill::report_to_json(r).dump() << '\n';
    } else if (format == "csv") {
      std::cout << r.check << ',' << r.bound << ',' << r.checked << ','
                << r.violations.size() << ',' << r.equality_cases.size() << ','
                << (r.ok() ? "true" : "false") << '\n';
    } else {
      std::cout << lensfill::report_text(r);
    }
  }
  return all_ok ? 0 : 1;
}

int run_fib(long n) {
  if (n < 1) throw UsageError("fib index must be >= 1");
  std::cout << lensfill::fibonacci(n) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal symplectic fillings of lens spaces, exactly"};
  app.require_subcommand(1);
  auto format_check = CLI::IsMember({"table", "json", "csv"});

  auto* cf = app.add_subcommand("cf", "Hirzebruch-Jung expansion, len/U/V and S/T word of p/q");
  std::string cf_p, cf_q, cf_eval_str, cf_format = "table";
  cf->add_option("p", cf_p, "numerator (coprime to q, p > q >= 1)");
  cf->add_option("q", cf_q, "denominator");
  cf->add_option("--eval", cf_eval_str, "evaluate a raw comma-separated tuple, e.g. 2,1,2");
  cf->add_option("--format", cf_format, "table|json|csv")->check(format_check);

  auto* zt = app.add_subcommand("zero-tuples", "admissible zero tuples of a given length");
  int zt_k = 0;
  bool zt_count = false;
  std::string zt_format = "table";
  zt->add_option("k", zt_k, "tuple length (1..14)")->required();
  zt->add_flag("--count", zt_count, "print only the count");
  zt->add_option("--format", zt_format, "table|json|csv")->check(format_check);

  auto* fl = app.add_subcommand("fillings", "minimal symplectic fillings of L(p,q)");
  std::string fl_p, fl_q, fl_format = "table";
  fl->add_option("p", fl_p, "p of L(p,q)")->required();
  fl->add_option("q", fl_q, "q of L(p,q)")->required();
  fl->add_option("--format", fl_format, "table|json|csv")->check(format_check);

  auto* vf = app.add_subcommand("verify", "brute-force verification sweeps");
  std::string vf_which, vf_format = "table";
  long vf_pmax = 300;
  int vf_lmax = 14, vf_jobs = 1;
  vf->add_option("which", vf_which,
                 "thm-divisibility|thm-length|census-d2|census-fib|fibonacci|identities|all")
      ->required();
  vf->add_option("--p-max", vf_pmax, "sweep bound on p (default 300)");
  vf->add_option("--l-max", vf_lmax, "bound on V for the fibonacci check (default 14)");
  vf->add_option("--jobs", vf_jobs, "worker threads (output is identical for any count)");
  vf->add_option("--format", vf_format, "table|json|csv")->check(format_check);

  auto* fb = app.add_subcommand("fib", "Fibonacci number F_n (F_1 = F_2 = 1)");
  long fb_n = 0;
  fb->add_option("n", fb_n, "index, n >= 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cf->parsed()) return run_cf(cf_p, cf_q, cf_eval_str, cf_format);
    if (zt->parsed()) return run_zero_tuples(zt_k, zt_count, zt_format);
    if (fl->parsed()) return run_fillings(fl_p, fl_q, fl_format);
    if (vf->parsed()) return run_verify(vf_which, vf_pmax, vf_lmax, vf_jobs, vf_format);
    if (fb->parsed()) return run_fib(fb_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
