#include "algd/render.hpp"

#include <sstream>

namespace algd {

namespace {

bool is_constant_value(const Poly& p, std::int64_t n) {
  return p.is_constant() && p.constant_value() == Rational(n);
}

std::string coefficient_text(const Poly& p, const std::string& basis) {
  if (basis.empty()) return p.to_string();
  if (is_constant_value(p, 1)) return basis;
  if (is_constant_value(p, -1)) return "-" + basis;
  if (p.terms().size() == 1) return p.to_string() + "*" + basis;
  return "(" + p.to_string() + ")*" + basis;
}

void join_term(std::ostream& out, bool first, const std::string& term) {
  if (first) {
    out << term;
  } else if (!term.empty() && term[0] == '-') {
    out << " - " << term.substr(1);
  } else {
    out << " + " << term;
  }
}

template <typename Tag>
std::string render_graded(const Graded<Tag>& g,
                          const std::vector<std::string>& names) {
  if (g.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [tuple, coeff] : g.components()) {
    std::string basis;
    for (int idx : tuple) {
      if (!basis.empty()) basis += "^";
      basis += names[idx - 1];
    }
    join_term(out, first, coefficient_text(coeff, basis));
    first = false;
  }
  return out.str();
}

std::vector<std::string> eps_names(int rank) {
  std::vector<std::string> out;
  out.reserve(rank);
  for (int i = 1; i <= rank; ++i) out.push_back("eps" + std::to_string(i));
  return out;
}

nlohmann::ordered_json components_json(
    const std::map<IndexTuple, Poly, TupleOrder>& comps) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [tuple, coeff] : comps) {
    nlohmann::ordered_json item;
    item["indices"] = tuple;
    item["coefficient"] = coeff.to_string();
    arr.push_back(item);
  }
  return arr;
}

}  // namespace

std::string render_multivector(const Multivector& m,
                               const std::vector<std::string>& basis) {
  return render_graded(m, basis);
}

std::string render_form(const Form& f) {
  return render_graded(f, eps_names(f.rank()));
}

std::string render_value(const Value& v, const std::vector<std::string>& basis) {
  switch (v.kind) {
    case Value::Kind::Scalar: return v.scalar.to_string();
    case Value::Kind::Multi: return render_multivector(v.mv, basis);
    case Value::Kind::FormVal: return render_form(v.form);
  }
  return "0";
}

std::string render_report(const CheckReport& rep) {
  std::ostringstream out;
  out << "subject: " << rep.subject << "\n";
  out << "verdict: " << (rep.valid ? "valid" : "invalid") << "\n";
  out << "identities:";
  for (std::size_t i = 0; i < rep.identities.size(); ++i)
    out << (i == 0 ? " " : ", ") << rep.identities[i];
  out << "\n";
  for (const auto& res : rep.residuals) {
    out << "residual " << res.identity << " [";
    for (std::size_t i = 0; i < res.location.size(); ++i) {
      if (i > 0) out << ",";
      out << res.location[i];
    }
    out << "] = " << res.value << "\n";
  }
  return out.str();
}

nlohmann::ordered_json report_json(const CheckReport& rep) {
  nlohmann::ordered_json j;
  j["subject"] = rep.subject;
  j["verdict"] = rep.valid ? "valid" : "invalid";
  j["identities"] = rep.identities;
  nlohmann::ordered_json residuals = nlohmann::ordered_json::array();
  for (const auto& res : rep.residuals) {
    nlohmann::ordered_json item;
    item["identity"] = res.identity;
    item["location"] = res.location;
    item["value"] = res.value;
    residuals.push_back(item);
  }
  j["residuals"] = residuals;
  return j;
}

nlohmann::ordered_json value_json(const Value& v,
                                  const std::vector<std::string>& basis) {
  nlohmann::ordered_json j;
  switch (v.kind) {
    case Value::Kind::Scalar:
      j["kind"] = "scalar";
      j["value"] = v.scalar.to_string();
      return j;
    case Value::Kind::Multi:
      j["kind"] = "multivector";
      j["rank"] = v.mv.rank();
      j["basis"] = basis;
      j["components"] = components_json(v.mv.components());
      return j;
    case Value::Kind::FormVal:
      j["kind"] = "form";
      j["rank"] = v.form.rank();
      j["basis"] = eps_names(v.form.rank());
      j["components"] = components_json(v.form.components());
      return j;
  }
  return j;
}

}  // namespace algd
