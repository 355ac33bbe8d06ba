#include "towercalc/cli/commands.hpp"

#include "towercalc/cli/generate.hpp"
#include "towercalc/complex/constructions.hpp"
#include "towercalc/complex/homology.hpp"
#include "towercalc/errors.hpp"
#include "towercalc/fracture/fracture.hpp"
#include "towercalc/hofib/hofib.hpp"
#include "towercalc/holimcalc/holim.hpp"
#include "towercalc/sections/model_checks.hpp"
#include "towercalc/trunc/truncation.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace towercalc::cli {

using complex::ChainComplex;
using complex::HomologyProfile;
using sections::CospanSection;
using sections::TowerSection;

namespace {

struct Inputs {
  std::vector<Document> documents;
  std::string bytes;
};

Inputs read_inputs(const Options& o, std::size_t expected) {
  if (o.files.size() != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " input file" +
                                (expected == 1 ? "" : "s"));
  Inputs in;
  for (const auto& f : o.files) {
    std::string bytes;
    in.documents.push_back(load(f, &bytes));
    in.bytes += std::to_string(bytes.size()) + ":" + bytes;
  }
  return in;
}

const ComplexDocument& as_complex(const Document& d, const std::string& what) {
  if (const auto* c = std::get_if<ComplexDocument>(&d)) return *c;
  throw ValidationError(what, "expected a complex document");
}

long need(const std::optional<long>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string(flag) + " is required");
  return *v;
}

std::string flags_line(const Options& o) {
  auto primes = [](const std::optional<std::vector<long>>& ps) {
    std::string s;
    if (ps)
      for (long p : *ps) s += std::to_string(p) + ",";
    return s;
  };
  return "k=" + (o.k ? std::to_string(*o.k) : "") + ";n=" + (o.n ? std::to_string(*o.n) : "") +
         ";seed=" + (o.seed ? std::to_string(*o.seed) : "") + ";count=" + std::to_string(o.count) +
         ";J=" + primes(o.primes_j) + ";K=" + primes(o.primes_k);
}

Json profile_json(const HomologyProfile& h) {
  Json j = Json::object();
  for (const auto& [k, g] : h)
    if (!g.is_zero()) j["H_" + std::to_string(k)] = g.to_string();
  return j;
}

Json localized_json(const std::map<long, fracture::LocalizedGroup>& h) {
  Json j = Json::object();
  for (const auto& [k, g] : h) j["H_" + std::to_string(k)] = g.to_string();
  return j;
}

fracture::PrimeSet prime_set(const std::optional<std::vector<long>>& ps) {
  return ps ? fracture::PrimeSet(ps->begin(), ps->end()) : fracture::PrimeSet();
}

std::uint64_t seed_of(const Options& o) { return o.seed.value_or(0); }

void require_batch(const Options& o) {
  if (o.count < 1) throw std::invalid_argument("--count must be positive");
}

// Summarizes a batch: the parent keeps only failing instances as children.
Certificate batch_certificate(const std::string& check, const std::vector<Certificate>& runs,
                              Json& results) {
  long passed = 0;
  Certificate out = Certificate::pass(check);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].passed) {
      ++passed;
      continue;
    }
    Certificate c = runs[i];
    c.check = "instance " + std::to_string(i) + ": " + c.check;
    out.add(std::move(c));
  }
  const std::string summary =
      std::to_string(passed) + "/" + std::to_string(runs.size()) + " pass";
  out.detail = summary;
  results["instances"] = runs.size();
  results["passed"] = passed;
  results["summary"] = summary;
  return out;
}

ChainComplex require_free_input(const ChainComplex& x, const std::string& where) {
  if (auto d = x.first_relation_degree())
    throw NotCofibrant(static_cast<int>(*d), where + ": relations in degree " + std::to_string(*d));
  return x;
}

std::vector<Certificate> tower_checks(const TowerSection& t, Json& results) {
  std::vector<Certificate> out;
  out.push_back(sections::is_post_fibrant(t));
  out.push_back(sections::is_tow_cofibrant(t));
  out.push_back(sections::is_homotopy_cartesian(t));
  results["levels"] = t.size();
  if (t.stabilization()) {
    try {
      const auto lim = holimcalc::tower_limit(t);
      results["limit"] = profile_json(complex::homology(lim.complex));
      out.push_back(Certificate::pass("declared stabilization",
                                      "from level " + std::to_string(*t.stabilization())));
    } catch (const StabilizationViolated& e) {
      auto fail = Certificate::fail("declared stabilization", e.what());
      fail.at_level(static_cast<long>(e.index()));
      out.push_back(std::move(fail));
    }
  }
  return out;
}

// A tower document as given, or the Postnikov tower of a complex of length
// --n (default one past the top degree), made levelwise free when `free`.
TowerSection tower_input(const Document& d, const Options& o, bool free) {
  if (const auto* t = std::get_if<TowerSection>(&d)) return *t;
  const ChainComplex& x = as_complex(d, o.files.front()).complex;
  const long m = o.n ? *o.n : std::max(x.max_degree(), 0L) + 1;
  TowerSection t = sections::postnikov_tower(x, m);
  return free ? sections::cofibrant_tower(t).tower : t;
}

std::pair<long, long> tower_degrees(const TowerSection& t) {
  long lo = 0, hi = 0;
  for (const auto& x : t.levels())
    if (x.length() > 0) {
      lo = std::min(lo, x.min_degree());
      hi = std::max(hi, x.max_degree());
    }
  return {lo - 1, hi + 1};
}

// Runs milnor_check in every degree, or explains why the tower has no limit.
Certificate milnor_all(const TowerSection& t) {
  const auto [lo, hi] = tower_degrees(t);
  Certificate out = Certificate::pass("Milnor sequence in every degree",
                                      "degrees " + std::to_string(lo) + ".." + std::to_string(hi));
  try {
    for (long i = lo; i <= hi; ++i) out.add(holimcalc::milnor_check(t, i));
  } catch (const StabilizationViolated& e) {
    out = Certificate::fail("Milnor sequence in every degree", e.what());
    const std::size_t horizon = t.maps().size();
    for (long i = lo; i <= hi; ++i) {
      const auto v = holimcalc::homology_diagnostic(t, i, horizon);
      if (!v.stabilized) {
        auto fail = Certificate::fail("Mittag-Leffler diagnostic",
                                      "NotStabilizedWithin(" + std::to_string(v.index) +
                                          ") in degree " + std::to_string(i));
        fail.at_degree(i);
        out.add(std::move(fail));
        break;
      }
    }
  }
  return out;
}

ChainComplex random_source(std::mt19937_64& rng) {
  // A free resolution of a random group in degree 0.
  static const long orders[] = {0, 2, 3, 4, 5, 6};
  ChainComplex m;
  const long pieces = draw(rng, 1, 2);
  for (long p = 0; p < pieces; ++p) {
    const long t = orders[rng() % std::size(orders)];
    m = complex::direct_sum(m, t == 0 ? complex::sphere(0) : complex::moore(t, 0));
  }
  return m;
}

using Handler = std::function<void(const Options&, RunReport&, std::string&)>;

void cmd_homology(const Options& o, RunReport& r, std::string& bytes) {
  auto in = read_inputs(o, 1);
  bytes = in.bytes;
  const auto& doc = as_complex(in.documents[0], o.files[0]);
  r.results["name"] = doc.name;
  r.results["homology"] = profile_json(complex::homology(doc.complex));
  r.certificates.push_back(Certificate::pass("document validates", "d o d = 0, relations respected"));
}

void cmd_truncate(const Options& o, RunReport& r, std::string& bytes) {
  auto in = read_inputs(o, 1);
  bytes = in.bytes;
  const long n = need(o.n, "--n");
  const auto& doc = as_complex(in.documents[0], o.files[0]);
  const auto p = trunc::postnikov_section(doc.complex, n);
  r.results["homology"] = profile_json(complex::homology(p.complex));
  r.results["complex"] = complex_to_json({doc.name + "-P" + std::to_string(n), p.complex, {}});
  r.certificates.push_back(trunc::is_n_type(p.complex, n));
  r.certificates.push_back(trunc::is_Pn_weq(p.quotient, n));
}

void cmd_cover(const Options& o, RunReport& r, std::string& bytes) {
  auto in = read_inputs(o, 1);
  bytes = in.bytes;
  const long k = need(o.k, "--k");
  const auto& doc = as_complex(in.documents[0], o.files[0]);
  const auto c = trunc::connective_cover(doc.complex, k);
  r.results["homology"] = profile_json(complex::homology(c.complex));
  r.results["complex"] = complex_to_json({doc.name + "-C" + std::to_string(k), c.complex, {}});
  r.certificates.push_back(trunc::fiber_sequence_check(doc.complex, k));
}

void cmd_layer(const Options& o, RunReport& r, std::string& bytes) {
  auto in = read_inputs(o, 1);
  bytes = in.bytes;
  const long k = need(o.k, "--k");
  const auto& doc = as_complex(in.documents[0], o.files[0]);
  r.results["homology"] = profile_json(complex::homology(trunc::layer(doc.complex, k)));
  r.certificates.push_back(trunc::layer_check(doc.complex, k));
}

void cmd_homcx(const Options& o, RunReport& r, std::string& bytes) {
  auto in = read_inputs(o, 2);
  bytes = in.bytes;
  const auto& m = as_complex(in.documents[0], o.files[0]).complex;
  const auto& n = as_complex(in.documents[1], o.files[1]).complex;
  r.results["homology"] = profile_json(complex::homology(complex::hom_complex(m, n)));
  if (m.is_free()) {
    const auto report = holimcalc::uct_ladder(m, n, std::max(n.max_degree(), 0L));
    r.certificates.push_back(report.certificate.children.front());
  } else {
    r.certificates.push_back(
        Certificate::pass("Hom complex computed", "source has relations; no coefficient check"));
  }
}

Json ladder_json(const holimcalc::LadderReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"k", row.k},
                    {"hom", row.hom_corner.to_string()},
                    {"ext", row.ext_corner.to_string()},
                    {"direct", row.direct.to_string()},
                    {"direct_truncated", row.direct_truncated.to_string()}});
  Json j = {{"n", report.n}, {"rows", std::move(rows)}};
  if (report.concentration) j["concentration"] = *report.concentration;
  if (report.discrepancy) j["ext_obstruction"] = report.discrepancy->to_string();
  return j;
}

void cmd_uct(const Options& o, RunReport& r, std::string& bytes) {
  if (!o.files.empty()) {
    auto in = read_inputs(o, 2);
    bytes = in.bytes;
    const auto& m = as_complex(in.documents[0], o.files[0]).complex;
    const auto& n = as_complex(in.documents[1], o.files[1]).complex;
    const auto report = holimcalc::uct_ladder(m, n, need(o.n, "--n"));
    r.results["ladder"] = ladder_json(report);
    r.certificates.push_back(report.certificate);
    return;
  }
  require_batch(o);
  std::vector<Certificate> runs;
  long obstructed = 0;
  for (long i = 0; i < o.count; ++i) {
    std::mt19937_64 rng(seed_of(o) + static_cast<std::uint64_t>(i));
    const ChainComplex n = random_complex(rng);
    const ChainComplex m = random_source(rng);
    const long cut = o.n ? *o.n : draw(rng, 0, std::max(n.max_degree(), 0L));
    auto report = holimcalc::uct_ladder(m, n, cut);
    if (report.discrepancy && !report.discrepancy->is_zero()) ++obstructed;
    runs.push_back(std::move(report.certificate));
  }
  r.certificates.push_back(batch_certificate("UCT ladder", runs, r.results));
  r.results["ext_obstructed"] = obstructed;
}

void cmd_tower(const Options& o, RunReport& r, std::string& bytes) {
  auto in = read_inputs(o, 1);
  bytes = in.bytes;
  for (auto& c : tower_checks(tower_input(in.documents[0], o, true), r.results))
    r.certificates.push_back(std::move(c));
}

void cmd_hypercomplete(const Options& o, RunReport& r, std::string& bytes) {
  auto instance = [](const ChainComplex& x) {
    Certificate c = holimcalc::hypercomplete_check(x);
    if (x.is_free())
      for (long i = 0; i <= 2; ++i)
        for (long n = 0; n <= x.max_degree(); ++n) c.add(holimcalc::generator_commutation_check(i, x, n));
    return c;
  };
  if (!o.files.empty()) {
    auto in = read_inputs(o, 1);
    bytes = in.bytes;
    r.certificates.push_back(instance(as_complex(in.documents[0], o.files[0]).complex));
    return;
  }
  require_batch(o);
  std::vector<Certificate> runs;
  for (long i = 0; i < o.count; ++i)
    runs.push_back(instance(generate(seed_of(o) + static_cast<std::uint64_t>(i)).complex));
  r.certificates.push_back(batch_certificate("hypercomplete", runs, r.results));
}

void cmd_milnor(const Options& o, RunReport& r, std::string& bytes) {
  if (!o.files.empty()) {
    auto in = read_inputs(o, 1);
    bytes = in.bytes;
    r.certificates.push_back(milnor_all(tower_input(in.documents[0], o, false)));
    return;
  }
  require_batch(o);
  std::vector<Certificate> runs;
  for (long i = 0; i < o.count; ++i) {
    const ChainComplex x = generate(seed_of(o) + static_cast<std::uint64_t>(i)).complex;
    runs.push_back(milnor_all(sections::postnikov_tower(x, std::max(x.max_degree(), 0L) + 1)));
  }
  r.certificates.push_back(batch_certificate("Milnor sequence", runs, r.results));
}

void cmd_fracture(const Options& o, RunReport& r, std::string& bytes) {
  if (o.files.empty()) {
    require_batch(o);
    std::vector<Certificate> runs;
    for (long i = 0; i < o.count; ++i) {
      std::mt19937_64 rng(seed_of(o) + static_cast<std::uint64_t>(i));
      ChainComplex x = random_complex(rng);
      for (const auto& p : fracture::PrimePartition::all_splits({2, 3, 5}))
        runs.push_back(fracture::arithmetic_square_check(x, p));
    }
    r.certificates.push_back(batch_certificate("arithmetic square", runs, r.results));
    return;
  }
  auto in = read_inputs(o, 1);
  bytes = in.bytes;
  const auto& x = as_complex(in.documents[0], o.files[0]).complex;
  const fracture::PrimePartition p(prime_set(o.primes_j), prime_set(o.primes_k));
  r.certificates.push_back(fracture::arithmetic_square_check(x, p));
  r.results["J"] = localized_json(fracture::localize_homology(x, fracture::LocalRing{p.j}));
  r.results["K"] = localized_json(fracture::localize_homology(x, fracture::LocalRing{p.k}));
  r.results["Q"] = localized_json(fracture::localize_homology(x, fracture::LocalRing{}));
  Json re = Json::object();
  for (const auto& [k, g] : complex::homology(x))
    if (!g.is_zero()) re["H_" + std::to_string(k)] = fracture::reassemble(g, p).to_string();
  r.results["reassembly"] = std::move(re);
}

void cmd_hofib(const Options& o, RunReport& r, std::string& bytes) {
  auto in = read_inputs(o, 1);
  bytes = in.bytes;
  const long k = need(o.k, "--k");
  const auto& x = require_free_input(as_complex(in.documents[0], o.files[0]).complex, o.files[0]);
  const auto s = hofib::build_hofib_section(x, k);
  r.results["fiber"] = profile_json(complex::homology(hofib::hofib_fiber(s).complex));
  r.results["cover"] = profile_json(complex::homology(trunc::connective_cover(x, k).complex));
  Certificate fib = sections::is_fibration(s.projection());
  fib.check = "X' -> P_k X is a fibration";
  r.certificates.push_back(std::move(fib));
  r.certificates.push_back(hofib::derived_counit_check(x, k));
  r.certificates.push_back(hofib::layer_equivalence_check(x, k));
  r.certificates.push_back(hofib::compatibility_check(k, {x}));
}

void cmd_section(const Options& o, RunReport& r, std::string& bytes) {
  auto in = read_inputs(o, 1);
  bytes = in.bytes;
  const Document& d = in.documents[0];
  if (const auto* s = std::get_if<CospanSection>(&d)) {
    r.results["kind"] = "cospan";
    r.certificates.push_back(fracture::cospan_model_check(*s));
    r.certificates.push_back(sections::is_homotopy_cartesian(*s));
    return;
  }
  r.results["kind"] = "tower";
  for (auto& c : tower_checks(tower_input(d, o, true), r.results)) r.certificates.push_back(std::move(c));
}

void cmd_generate(const Options& o, RunReport& r, std::string&) {
  require_batch(o);
  Json docs = Json::array();
  for (long i = 0; i < o.count; ++i) {
    const ComplexDocument doc = generate(seed_of(o) + static_cast<std::uint64_t>(i));
    const Json j = complex_to_json(doc);
    const bool round_trip = complex_from_json(j).complex == doc.complex;
    Certificate c = round_trip ? Certificate::pass("document round-trips", doc.name)
                               : Certificate::fail("document round-trips", doc.name);
    r.certificates.push_back(std::move(c));
    docs.push_back(j);
  }
  const Json out = o.count == 1 ? docs.front() : docs;
  if (o.output) save(*o.output, out);
  r.results[o.count == 1 ? "document" : "documents"] = out;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"homology", cmd_homology}, {"truncate", cmd_truncate},
      {"cover", cmd_cover},       {"layer", cmd_layer},
      {"homcx", cmd_homcx},       {"uct", cmd_uct},
      {"tower", cmd_tower},       {"hypercomplete", cmd_hypercomplete},
      {"milnor", cmd_milnor},     {"fracture", cmd_fracture},
      {"hofib", cmd_hofib},       {"section", cmd_section},
      {"generate", cmd_generate}};
  return table;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "homology", "truncate", "cover",    "layer",  "homcx",   "uct",     "tower",
      "hypercomplete", "milnor", "fracture", "hofib", "section", "generate"};
  return names;
}

RunReport run(const std::string& command, const Options& options) {
  const auto& table = handlers();
  const auto it = table.find(command);
  if (it == table.end()) throw std::invalid_argument("unknown subcommand " + command);
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.command = command;
  std::string bytes;
  it->second(options, r, bytes);
  r.inputs_digest = sha256_hex(command + "\n" + flags_line(options) + "\n" + bytes);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace towercalc::cli
