// Command line front end for the quaternionic Nullstellensatz library.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qnss/instance.hpp"
#include "qnss/nss.hpp"
#include "qnss/parse.hpp"
#include "qnss/print.hpp"

namespace {

using namespace qnss;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInputError = 2;

std::vector<Quaternion> parse_point_list(const std::string& text) {
  std::vector<Quaternion> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = comma == std::string::npos ? text.substr(start)
                                                   : text.substr(start, comma - start);
    out.push_back(parse_quaternion(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Rat> require_real(const std::vector<Quaternion>& point) {
  std::vector<Rat> out;
  for (const Quaternion& q : point) {
    if (!q.is_real()) throw std::invalid_argument("point must be real for this ring");
    out.push_back(q.a());
  }
  return out;
}

MonoOrderKind order_from_string(const std::string& s) {
  if (s == "lex") return MonoOrderKind::Lex;
  if (s == "deglex") return MonoOrderKind::DegLex;
  if (s == "degrevlex") return MonoOrderKind::DegRevLex;
  throw std::invalid_argument("unknown monomial order: " + s);
}

VarNamer namer_for(const LoweredInstance& w, const Instance& inst) {
  return inst.ring == InstanceRing::QuaternionFree && w.nvars == 4 * inst.nvars ? y_names()
                                                                                : x_names();
}

void echo_options(const Instance& inst, const std::string& order) {
  const char* ring = inst.ring == InstanceRing::Rational          ? "q"
                     : inst.ring == InstanceRing::QuaternionCentral ? "hc"
                                                                    : "hx";
  std::cout << "ring: " << ring << "  vars: " << inst.nvars << "  rank: " << inst.rank
            << "  order: " << order << "\n";
}

int run_eval(const std::string& ring, int nvars, const std::string& expr,
             const std::string& point_text) {
  std::vector<Quaternion> point = parse_point_list(point_text);
  if (static_cast<int>(point.size()) != nvars)
    throw std::invalid_argument("point has wrong dimension");
  Quaternion value;
  if (ring == "q") {
    Poly f = parse_poly(expr, nvars);
    value = Quaternion(f.evaluate(require_real(point)));
  } else if (ring == "hc") {
    QPoly f = parse_qpoly(expr, nvars);
    value = f.evaluate(require_real(point));
  } else if (ring == "hx") {
    NCPoly f = parse_ncpoly(expr, nvars);
    value = f.evaluate(point);
  } else {
    throw std::invalid_argument("unknown ring tag: " + ring);
  }
  std::cout << to_string(value) << "\n";
  return kExitOk;
}

int run_member(const std::string& path, const std::string& query,
               const std::string& order) {
  Instance inst = load_instance(path);
  LoweredInstance w = lower_instance(inst);
  echo_options(inst, order);
  std::vector<QRow> queries = w.queries;
  if (!query.empty()) {
    queries.clear();
    if (inst.ring == InstanceRing::QuaternionFree) {
      queries.push_back({phi(parse_ncpoly(query, inst.nvars))});
    } else if (inst.rank == 1) {
      queries.push_back({inst.ring == InstanceRing::Rational
                             ? QPoly::from_poly(parse_poly(query, inst.nvars))
                             : parse_qpoly(query, inst.nvars)});
    } else {
      throw std::invalid_argument("--query supports rank 1; use the instance file for rows");
    }
  }
  if (queries.empty()) throw std::invalid_argument("no query in instance or command line");
  Submodule n(w.ring, w.nvars, w.rank, w.gens, order_from_string(order));
  bool all = true;
  for (std::size_t t = 0; t < queries.size(); ++t) {
    bool in = n.member(queries[t]);
    all = all && in;
    std::cout << "query " << t + 1 << ": " << (in ? "member" : "not a member") << "\n";
  }
  return all ? kExitOk : kExitRefuted;
}

int run_groebner(const std::string& path, const std::string& order) {
  Instance inst = load_instance(path);
  LoweredInstance w = lower_instance(inst);
  echo_options(inst, order);
  Submodule n(w.ring, w.nvars, w.rank, w.gens, order_from_string(order));
  std::cout << "groebner basis (" << n.canonical_basis().size() << " rows):\n"
            << format_basis(n, namer_for(w, inst));
  return kExitOk;
}

int run_cmodule(const std::string& ring, int nvars, int rank, const std::string& point_text,
                const std::string& vec_text, const std::string& order) {
  RingTag tag = ring == "q" ? RingTag::Rational : RingTag::QuaternionCentral;
  if (ring != "q" && ring != "hc")
    throw std::invalid_argument("cmodule supports rings q and hc");
  PointedFiber fiber;
  fiber.point = require_real(parse_point_list(point_text));
  fiber.vec = parse_point_list(vec_text);
  if (static_cast<int>(fiber.point.size()) != nvars)
    throw std::invalid_argument("point has wrong dimension");
  Submodule c = c_module(tag, nvars, rank, fiber, order_from_string(order));
  std::cout << "ring: " << ring << "  vars: " << nvars << "  rank: " << rank
            << "  order: " << order << "\n";
  std::cout << "groebner basis (" << c.canonical_basis().size() << " rows):\n"
            << format_basis(c);
  return kExitOk;
}

int run_kmodule(const std::string& path, const std::string& point_text,
                const std::string& order) {
  Instance inst = load_instance(path);
  if (inst.ring == InstanceRing::QuaternionFree)
    throw std::invalid_argument("kmodule supports rings q and hc");
  LoweredInstance w = lower_instance(inst);
  echo_options(inst, order);
  Submodule n(w.ring, w.nvars, w.rank, w.gens, order_from_string(order));
  std::vector<Rat> point = require_real(parse_point_list(point_text));
  Submodule k = k_module(n, point);
  std::cout << "groebner basis (" << k.canonical_basis().size() << " rows):\n"
            << format_basis(k);
  return kExitOk;
}

int run_closure(const std::string& path, int bound_override, int max_tuple_override,
                const std::string& order) {
  Instance inst = load_instance(path);
  LoweredInstance w = lower_instance(inst);
  const int bound = bound_override >= 0 ? bound_override : inst.bound;
  const int max_tuple = max_tuple_override >= 0 ? max_tuple_override : inst.max_tuple;
  echo_options(inst, order);
  std::cout << "bound: " << bound << "  max-tuple: " << max_tuple << "\n";
  if (auto err = validate_zero_set(w.zeros, w.gens))
    throw std::invalid_argument("invalid zero set: " + *err);
  VanishingResult vanishing = vanishing_module(w.zeros, w.ring, w.nvars, w.rank,
                                               order_from_string(order));
  std::vector<QRow> pool =
      default_candidate_pool(w.gens, &vanishing.module, w.nvars, w.rank, bound);
  ClosureResult closure = real_closure_bounded(w.gens, w.ring, w.nvars, w.rank, pool,
                                               max_tuple, order_from_string(order));
  VarNamer names = namer_for(w, inst);
  std::cout << "admitted " << closure.admitted.size() << " element(s) in "
            << closure.certificate.steps.size() << " step(s)\n";
  for (std::size_t t = 0; t < closure.certificate.steps.size(); ++t) {
    std::cout << "step " << t + 1 << ":";
    for (const QRow& f : closure.certificate.steps[t].tuple)
      std::cout << " " << to_string(f, names);
    std::cout << "\n";
  }
  std::cout << "closure basis (" << closure.module.canonical_basis().size() << " rows):\n"
            << format_basis(closure.module, names);
  return kExitOk;
}

int run_verify_cert(const std::string& path, const std::string& order) {
  Instance inst = load_instance(path);
  LoweredInstance w = lower_instance(inst);
  echo_options(inst, order);
  if (!w.certificate) throw std::invalid_argument("instance has no certificate");
  CertVerdict verdict = verify_certificate(*w.certificate, w.gens, w.ring, w.nvars, w.rank,
                                           order_from_string(order));
  if (verdict.accepted) {
    std::cout << "certificate: accepted (" << w.certificate->steps.size() << " step(s))\n";
    return kExitOk;
  }
  std::cout << "certificate: rejected";
  if (verdict.failed_step >= 0) std::cout << " at step " << verdict.failed_step + 1;
  std::cout << " (" << verdict.message << ")\n";
  return kExitRefuted;
}

int run_check(const std::vector<std::string>& paths, const std::string& format) {
  bool all_ok = true;
  for (std::size_t t = 0; t < paths.size(); ++t) {
    Instance inst = load_instance(paths[t]);
    InstanceReport report = check_nullstellensatz_instance(inst);
    if (format == "json") {
      std::cout << report_json(report) << "\n";
    } else {
      if (t) std::cout << "\n";
      std::cout << report_text(report);
    }
    all_ok = all_ok && report.consistent();
  }
  return all_ok ? kExitOk : kExitRefuted;
}

int run_phi(int nvars, const std::string& expr) {
  NCPoly f = parse_ncpoly(expr, nvars);
  std::cout << to_string(phi(f), y_names()) << "\n";
  return kExitOk;
}

int run_conj(int nvars, const std::string& expr, const std::string& point_text) {
  NCPoly f = parse_ncpoly(expr, nvars);
  NCPoly g = f.conjugate();
  std::cout << "phi: " << to_string(phi(g), y_names()) << "\n";
  if (!point_text.empty()) {
    std::vector<Quaternion> point = parse_point_list(point_text);
    std::cout << "value: " << to_string(g.evaluate(point)) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for real and quaternionic Nullstellensaetze "
               "over matrix polynomial rings"};
  app.require_subcommand(1);

  std::string ring = "q";
  std::string order = "degrevlex";
  std::string expr;
  std::string point;
  std::string vec;
  std::string query;
  std::string path;
  std::string all_dir;
  std::string format = "text";
  int nvars = 1;
  int rank = 1;
  int bound = -1;
  int max_tuple = -1;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression at a point");
  eval->add_option("--ring", ring, "Ring tag: q, hc or hx")->capture_default_str();
  eval->add_option("-d,--vars", nvars, "Number of variables")->required();
  eval->add_option("--expr", expr, "Expression in the ring grammar")->required();
  eval->add_option("--point", point,
                   "Comma-separated point coordinates (quaternion literals)")
      ->required();

  auto* member = app.add_subcommand("member", "Module membership of the instance query");
  member->add_option("file", path, "Instance JSON file")->required();
  member->add_option("--query", query, "Inline query expression (rank-1 instances)");
  member->add_option("--order", order, "Monomial order: lex, deglex, degrevlex")
      ->capture_default_str();

  auto* groebner = app.add_subcommand("groebner", "Canonical Groebner basis of the instance module");
  groebner->add_option("file", path, "Instance JSON file")->required();
  groebner->add_option("--order", order, "Monomial order: lex, deglex, degrevlex")
      ->capture_default_str();

  auto* cmodule = app.add_subcommand("cmodule", "Evaluation submodule C_{m_a, v}");
  cmodule->add_option("--ring", ring, "Ring tag: q or hc")->capture_default_str();
  cmodule->add_option("-d,--vars", nvars, "Number of variables")->required();
  cmodule->add_option("-n,--rank", rank, "Module rank")->capture_default_str();
  cmodule->add_option("--point", point, "Rational point a")->required();
  cmodule->add_option("--vector", vec, "Pairing vector v (nonzero)")->required();
  cmodule->add_option("--order", order, "Monomial order")->capture_default_str();

  auto* kmodule = app.add_subcommand("kmodule", "Smallest m_a-prime submodule containing N");
  kmodule->add_option("file", path, "Instance JSON file")->required();
  kmodule->add_option("--point", point, "Rational point a")->required();
  kmodule->add_option("--order", order, "Monomial order")->capture_default_str();

  auto* closure = app.add_subcommand("closure", "Bounded real-closure fixpoint");
  closure->add_option("file", path, "Instance JSON file")->required();
  closure->add_option("--bound", bound, "Candidate degree bound (default: instance)");
  closure->add_option("--max-tuple", max_tuple, "Largest tuple size (default: instance)");
  closure->add_option("--order", order, "Monomial order")->capture_default_str();

  auto* verify = app.add_subcommand("verify-cert", "Replay a real-closure certificate");
  verify->add_option("file", path, "Instance JSON file")->required();
  verify->add_option("--order", order, "Monomial order")->capture_default_str();

  auto* check = app.add_subcommand("check-instance", "Run the Nullstellensatz harness");
  check->add_option("file", path, "Instance JSON file");
  check->add_option("--all", all_dir, "Run every .json instance in a directory");
  check->add_option("--format", format, "Report format: text or json")->capture_default_str();

  auto* phi_cmd = app.add_subcommand("phi", "Canonical form of a free-ring expression");
  phi_cmd->add_option("-d,--vars", nvars, "Number of variables")->required();
  phi_cmd->add_option("--expr", expr, "Free-ring expression")->required();

  auto* conj = app.add_subcommand("conj", "Pointwise conjugate of a free-ring expression");
  conj->add_option("-d,--vars", nvars, "Number of variables")->required();
  conj->add_option("--expr", expr, "Free-ring expression")->required();
  conj->add_option("--point", point, "Optional evaluation point");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return run_eval(ring, nvars, expr, point);
    if (member->parsed()) return run_member(path, query, order);
    if (groebner->parsed()) return run_groebner(path, order);
    if (cmodule->parsed()) return run_cmodule(ring, nvars, rank, point, vec, order);
    if (kmodule->parsed()) return run_kmodule(path, point, order);
    if (closure->parsed()) return run_closure(path, bound, max_tuple, order);
    if (verify->parsed()) return run_verify_cert(path, order);
    if (check->parsed()) {
      std::vector<std::string> paths;
      if (!all_dir.empty()) {
        for (const auto& entry : std::filesystem::directory_iterator(all_dir)) {
          if (entry.path().extension() == ".json") paths.push_back(entry.path().string());
        }
        std::sort(paths.begin(), paths.end());
      }
      if (!path.empty()) paths.push_back(path);
      if (paths.empty()) throw std::invalid_argument("no instance file given");
      return run_check(paths, format);
    }
    if (phi_cmd->parsed()) return run_phi(nvars, expr);
    if (conj->parsed()) return run_conj(nvars, expr, point);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
