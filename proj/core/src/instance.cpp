#include "qnss/instance.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qnss/parse.hpp"

namespace qnss {

namespace {

using nlohmann::json;

std::vector<std::string> row_strings(const json& node) {
  std::vector<std::string> out;
  if (node.is_string()) {
    out.push_back(node.get<std::string>());
  } else if (node.is_array()) {
    for (const auto& e : node) out.push_back(e.get<std::string>());
  } else {
    throw std::invalid_argument("row must be a string or an array of strings");
  }
  return out;
}

QRow parse_row_q(const json& node, InstanceRing ring, int nvars, int rank) {
  std::vector<std::string> texts = row_strings(node);
  if (static_cast<int>(texts.size()) != rank)
    throw std::invalid_argument("row has " + std::to_string(texts.size()) +
                                " entries, expected " + std::to_string(rank));
  QRow row;
  for (const std::string& s : texts) {
    row.push_back(ring == InstanceRing::Rational ? QPoly::from_poly(parse_poly(s, nvars))
                                                 : parse_qpoly(s, nvars));
  }
  return row;
}

std::vector<NCPoly> parse_row_nc(const json& node, int nvars, int rank) {
  std::vector<std::string> texts = row_strings(node);
  if (static_cast<int>(texts.size()) != rank)
    throw std::invalid_argument("row has " + std::to_string(texts.size()) +
                                " entries, expected " + std::to_string(rank));
  std::vector<NCPoly> row;
  for (const std::string& s : texts) row.push_back(parse_ncpoly(s, nvars));
  return row;
}

std::vector<Quaternion> parse_quat_list(const json& node) {
  std::vector<Quaternion> out;
  for (const auto& e : node) out.push_back(parse_quaternion(e.get<std::string>()));
  return out;
}

ZeroProvenance parse_provenance(const std::string& s) {
  if (s == "fixture") return ZeroProvenance::Fixture;
  if (s == "grid-search") return ZeroProvenance::GridSearch;
  if (s == "solver") return ZeroProvenance::Solver;
  throw std::invalid_argument("unknown zero-pair source: " + s);
}

}  // namespace

Instance instance_from_json_text(const std::string& text, const std::string& fallback_name) {
  json doc = json::parse(text);
  Instance inst;
  inst.name = doc.value("name", fallback_name);
  std::string ring = doc.value("ring", "q");
  if (ring == "q") {
    inst.ring = InstanceRing::Rational;
  } else if (ring == "hc") {
    inst.ring = InstanceRing::QuaternionCentral;
  } else if (ring == "hx") {
    inst.ring = InstanceRing::QuaternionFree;
  } else {
    throw std::invalid_argument("unknown ring tag: " + ring);
  }
  inst.nvars = doc.at("vars").get<int>();
  inst.rank = doc.value("rank", 1);
  if (inst.nvars < 1 || inst.rank < 1)
    throw std::invalid_argument("vars and rank must be positive");
  inst.bound = doc.value("bound", 2);
  inst.max_tuple = doc.value("max_tuple", 2);
  inst.assert_radical_equals_vanishing = doc.value("assert_radical_equals_vanishing", false);

  const bool free_ring = inst.ring == InstanceRing::QuaternionFree;
  if (doc.contains("generators")) {
    for (const auto& row : doc["generators"]) {
      if (free_ring) {
        inst.nc_gen_rows.push_back(parse_row_nc(row, inst.nvars, inst.rank));
      } else {
        inst.gen_rows.push_back(parse_row_q(row, inst.ring, inst.nvars, inst.rank));
      }
    }
  }
  if (doc.contains("generator_matrices")) {
    for (const auto& m : doc["generator_matrices"]) {
      const std::string s = m.get<std::string>();
      if (free_ring) {
        inst.nc_gen_mats.push_back(parse_ncmat(s, inst.nvars));
      } else {
        inst.gen_mats.push_back(
            parse_qmat(s, inst.nvars, inst.ring == InstanceRing::Rational));
      }
    }
  }
  auto add_query_row = [&](const json& row) {
    if (free_ring) {
      inst.nc_query_rows.push_back(parse_row_nc(row, inst.nvars, inst.rank));
    } else {
      inst.query_rows.push_back(parse_row_q(row, inst.ring, inst.nvars, inst.rank));
    }
  };
  if (doc.contains("query")) add_query_row(doc["query"]);
  if (doc.contains("queries")) {
    for (const auto& row : doc["queries"]) add_query_row(row);
  }
  if (doc.contains("query_matrix")) {
    const std::string s = doc["query_matrix"].get<std::string>();
    if (free_ring) {
      inst.nc_query_mats.push_back(parse_ncmat(s, inst.nvars));
    } else {
      inst.query_mats.push_back(
          parse_qmat(s, inst.nvars, inst.ring == InstanceRing::Rational));
    }
  }

  if (doc.contains("zeros")) {
    for (const auto& z : doc["zeros"]) {
      ZeroPair pair;
      pair.point = parse_quat_list(z.at("point"));
      pair.vec = parse_quat_list(z.at("vector"));
      pair.provenance = parse_provenance(z.value("source", "fixture"));
      if (static_cast<int>(pair.point.size()) != inst.nvars)
        throw std::invalid_argument("zero-pair point dimension mismatch");
      if (static_cast<int>(pair.vec.size()) != inst.rank)
        throw std::invalid_argument("zero-pair vector rank mismatch");
      inst.zeros.pairs.push_back(std::move(pair));
    }
  }

  if (doc.contains("certificate")) {
    const json& c = doc["certificate"];
    Certificate cert;
    for (const auto& s : c.value("steps", json::array())) {
      CertStep step;
      for (const auto& row : s.at("tuple")) {
        if (free_ring) {
          // Steps of a free-ring certificate live in the phi-image.
          std::vector<NCPoly> nc = parse_row_nc(row, inst.nvars, inst.rank);
          QRow img;
          for (const NCPoly& f : nc) img.push_back(phi(f));
          step.tuple.push_back(std::move(img));
        } else {
          step.tuple.push_back(parse_row_q(row, inst.ring, inst.nvars, inst.rank));
        }
      }
      for (const auto& u : s.value("uses", json::array()))
        step.uses.push_back(u.get<std::size_t>());
      cert.steps.push_back(std::move(step));
    }
    if (c.contains("target")) {
      if (free_ring) {
        std::vector<NCPoly> nc = parse_row_nc(c["target"], inst.nvars, inst.rank);
        QRow img;
        for (const NCPoly& f : nc) img.push_back(phi(f));
        cert.target = std::move(img);
      } else {
        cert.target = parse_row_q(c["target"], inst.ring, inst.nvars, inst.rank);
      }
    }
    inst.certificate = std::move(cert);
  }

  if (doc.contains("expect")) {
    const json& e = doc["expect"];
    if (e.contains("geometric")) inst.expect_geometric = e["geometric"].get<bool>();
    if (e.contains("algebraic")) inst.expect_algebraic = e["algebraic"].get<bool>();
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (auto dot = name.find_last_of('.'); dot != std::string::npos) name = name.substr(0, dot);
  return instance_from_json_text(buf.str(), name);
}

std::string report_text(const InstanceReport& r) {
  std::ostringstream os;
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  os << "instance: " << r.name << "\n";
  if (!r.loaded) {
    os << "error: " << r.zero_set_error << "\n";
    return os.str();
  }
  if (!r.zero_set_valid) {
    os << "zero-set: invalid (" << r.zero_set_error << ")\n";
    return os.str();
  }
  os << "zero-set: valid" << (r.vacuous_zero_set ? " (empty: vanishing module is vacuous)" : "")
     << "\n";
  os << "geometric: " << yesno(r.geometric) << "\n";
  if (r.has_certificate) {
    os << "certificate: " << (r.certificate_accepted ? "accepted" : "rejected");
    if (!r.certificate_error.empty()) os << " (" << r.certificate_error << ")";
    os << "\n";
  }
  os << "closure: admitted " << r.closure_admitted
     << " element(s); query member: " << yesno(r.closure_member) << "\n";
  os << "algebraic: " << yesno(r.algebraic) << "\n";
  if (r.geometric && !r.algebraic)
    os << "note: closure bound insufficient or zero set incomplete\n";
  os << "soundness: " << (r.soundness_ok ? "ok" : "VIOLATED (" + r.soundness_error + ")") << "\n";
  if (r.equality_checked)
    os << "radical equals vanishing module: " << yesno(r.equality_ok) << "\n";
  if (!r.expectations_ok) os << "expectation mismatch: " << r.expectation_error << "\n";
  os << "consistent: " << yesno(r.consistent()) << "\n";
  return os.str();
}

std::string report_json(const InstanceReport& r) {
  nlohmann::ordered_json doc;
  doc["name"] = r.name;
  doc["loaded"] = r.loaded;
  doc["zero_set_valid"] = r.zero_set_valid;
  if (!r.zero_set_error.empty()) doc["zero_set_error"] = r.zero_set_error;
  doc["vacuous_zero_set"] = r.vacuous_zero_set;
  doc["geometric"] = r.geometric;
  if (r.has_certificate) {
    doc["certificate_accepted"] = r.certificate_accepted;
    if (!r.certificate_error.empty()) doc["certificate_error"] = r.certificate_error;
  }
  doc["closure_admitted"] = r.closure_admitted;
  doc["closure_member"] = r.closure_member;
  doc["algebraic"] = r.algebraic;
  doc["soundness_ok"] = r.soundness_ok;
  if (!r.soundness_error.empty()) doc["soundness_error"] = r.soundness_error;
  if (r.equality_checked) doc["radical_equals_vanishing"] = r.equality_ok;
  doc["expectations_ok"] = r.expectations_ok;
  doc["consistent"] = r.consistent();
  return doc.dump();
}

}  // namespace qnss
