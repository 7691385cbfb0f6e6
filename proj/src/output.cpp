#include "faulhaber/output.hpp"

#include <sstream>
#include <stdexcept>

namespace faulhaber {

namespace {

std::vector<std::string> coeff_strings(const PolyS1& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

PolyS1 poly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<ExactRational> parsed;
  parsed.reserve(coeffs.size());
  for (const auto& s : coeffs) parsed.emplace_back(s);
  return PolyS1(std::move(parsed));
}

// appends "c1 m1 + c2 m2 - ..." with unit coefficients omitted before a
// nonempty monomial and the sign of the first term attached
void append_term(std::string& out, bool& first, const ExactRational& coeff,
                  const std::string& monomial) {
  if (coeff.is_zero()) return;
  const bool negative = coeff.sign() < 0;
  const ExactRational magnitude = negative ? -coeff : coeff;
  std::string body;
  if (magnitude == ExactRational(1) && !monomial.empty())
    body = monomial;
  else
    body = monomial.empty() ? magnitude.to_string() : magnitude.to_string() + " " + monomial;
  if (first) {
    out += negative ? "-" + body : body;
    first = false;
  } else {
    out += negative ? " - " + body : " + " + body;
  }
}

std::string plain_monomial(unsigned degree, bool with_s2) {
  std::string m;
  if (degree == 1)
    m = "S1";
  else if (degree >= 2)
    m = "S1^" + std::to_string(degree);
  if (with_s2) {
    if (!m.empty()) m += " ";
    m += "S2";
  }
  return m;
}

std::string latex_monomial(unsigned degree) {
  if (degree == 0) return "";
  if (degree == 1) return "S_1";
  return "S_1^" + std::to_string(degree);
}

struct FactoredView {
  std::string factor;  // "S1^2", "S2" or "S1"
  PolyS1 f;
};

FactoredView factored_view(unsigned k, const ReducedPowerPoly& p) {
  if (k == 1) return {"S1", PolyS1{ExactRational(1)}};
  FaulhaberForm form(k, p);
  if (form.parity() == Parity::even) return {"S2", form.polynomial()};
  return {"S1^2", form.polynomial()};
}

void append_integer_terms(std::string& out, const std::vector<ExactInteger>& coeffs) {
  bool first = true;
  for (unsigned i = 0; i < coeffs.size(); ++i) {
    const ExactInteger& c = coeffs[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const ExactInteger magnitude = negative ? -c : c;
    const std::string monomial = latex_monomial(i);
    std::string body;
    if (magnitude == ExactInteger(1) && !monomial.empty())
      body = monomial;
    else
      body = monomial.empty() ? magnitude.to_string() : magnitude.to_string() + " " + monomial;
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  if (first) out += "0";
}

}  // namespace

std::string to_string(GeneratorKind kind) {
  return kind == GeneratorKind::standard ? "standard" : "alternative";
}

std::string to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

GeneratorKind generator_kind_from_string(const std::string& s) {
  if (s == "standard") return GeneratorKind::standard;
  if (s == "alternative") return GeneratorKind::alternative;
  throw std::invalid_argument("unknown generator kind: '" + s + "'");
}

nlohmann::ordered_json OutputRecord::to_json() const {
  return nlohmann::ordered_json{{"k", k},
                                {"parity", faulhaber::to_string(parity)},
                                {"factor", factor},
                                {"f_coeffs", f_coeffs},
                                {"reduced",
                                 {{"a_coeffs", a_coeffs}, {"b_coeffs", b_coeffs}}},
                                {"generator", faulhaber::to_string(generator)}};
}

OutputRecord OutputRecord::from_json(const nlohmann::json& j) {
  OutputRecord rec;
  rec.k = j.at("k").get<unsigned>();
  rec.parity = j.at("parity").get<std::string>() == "even" ? Parity::even : Parity::odd;
  rec.factor = j.at("factor").get<std::string>();
  rec.f_coeffs = j.at("f_coeffs").get<std::vector<std::string>>();
  rec.a_coeffs = j.at("reduced").at("a_coeffs").get<std::vector<std::string>>();
  rec.b_coeffs = j.at("reduced").at("b_coeffs").get<std::vector<std::string>>();
  rec.generator = generator_kind_from_string(j.at("generator").get<std::string>());
  return rec;
}

ReducedPowerPoly OutputRecord::reconstruct_reduced() const {
  return {poly_from_strings(a_coeffs), poly_from_strings(b_coeffs)};
}

ReducedPowerPoly OutputRecord::reconstruct_factored() const {
  const PolyS1 f = poly_from_strings(f_coeffs);
  if (factor == "S2") return {PolyS1{}, f};
  if (factor == "S1^2") return {f.shifted_up(2), PolyS1{}};
  if (factor == "S1") return {f.shifted_up(1), PolyS1{}};
  throw std::invalid_argument("unknown factor: '" + factor + "'");
}

OutputRecord make_output_record(unsigned k, const ReducedPowerPoly& p, GeneratorKind kind) {
  OutputRecord rec;
  rec.k = k;
  rec.parity = k % 2 == 0 ? Parity::even : Parity::odd;
  rec.generator = kind;
  const FactoredView view = factored_view(k, p);
  rec.factor = view.factor;
  rec.f_coeffs = coeff_strings(view.f);
  rec.a_coeffs = coeff_strings(p.a);
  rec.b_coeffs = coeff_strings(p.b);
  return rec;
}

std::string render_plain(unsigned k, const ReducedPowerPoly& p) {
  std::string out = "S" + std::to_string(k) + " = ";
  bool first = true;
  for (unsigned i = 0; i < p.a.coefficients().size(); ++i)
    append_term(out, first, p.a.coeff(i), plain_monomial(i, false));
  for (unsigned i = 0; i < p.b.coefficients().size(); ++i)
    append_term(out, first, p.b.coeff(i), plain_monomial(i, true));
  if (first) out += "0";
  return out;
}

std::string render_latex(unsigned k, const ReducedPowerPoly& p) {
  const FactoredView view = factored_view(k, p);

  // smallest common denominator of the F coefficients
  mpz_class lcm = 1;
  for (const auto& c : view.f.coefficients())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().raw().get_mpz_t());

  std::vector<ExactInteger> scaled;
  scaled.reserve(view.f.coefficients().size());
  for (const auto& c : view.f.coefficients())
    scaled.emplace_back(mpz_class(c.numerator().raw() * (lcm / c.denominator().raw())));

  std::string out;
  if (lcm != 1) out += "\\frac{1}{" + lcm.get_str() + "}";
  if (view.factor == "S1^2")
    out += "S_1^2";
  else if (view.factor == "S2")
    out += "S_2";
  else
    out += "S_1";
  out += "\\left(";
  append_integer_terms(out, scaled);
  out += "\\right)";
  return out;
}

const char* const kTableCsvHeader = "k,factor,coefficients";

std::string render_csv_row(const OutputRecord& rec) {
  std::string coeffs;
  for (std::size_t i = 0; i < rec.f_coeffs.size(); ++i) {
    if (i > 0) coeffs += ";";
    coeffs += rec.f_coeffs[i];
  }
  return std::to_string(rec.k) + "," + rec.factor + "," + coeffs;
}

std::string render_table_plain(const std::vector<OutputRecord>& rows) {
  std::ostringstream out;
  for (const auto& rec : rows) {
    std::string k_text = std::to_string(rec.k);
    out << std::string(k_text.size() < 4 ? 4 - k_text.size() : 0, ' ') << k_text << "  "
        << rec.factor << std::string(rec.factor.size() < 4 ? 4 - rec.factor.size() + 2 : 2, ' ');
    for (std::size_t i = 0; i < rec.f_coeffs.size(); ++i) {
      if (i > 0) out << " ";
      out << rec.f_coeffs[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string render_table_csv(const std::vector<OutputRecord>& rows) {
  std::string out = std::string(kTableCsvHeader) + "\n";
  for (const auto& rec : rows) out += render_csv_row(rec) + "\n";
  return out;
}

std::string render_table_jsonl(const std::vector<OutputRecord>& rows) {
  std::string out;
  for (const auto& rec : rows) out += rec.to_json().dump() + "\n";
  return out;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"n", f.n}, {"expected", f.expected}, {"got", f.got}});
  return nlohmann::ordered_json{
      {"k", report.k}, {"n_max", report.n_max}, {"pass", report.pass}, {"failures", failures}};
}

std::uint64_t canonical_hash(const ReducedPowerPoly& p) {
  std::string text = "a=";
  for (const auto& c : p.a.coefficients()) text += c.to_string() + ",";
  text += ";b=";
  for (const auto& c : p.b.coefficients()) text += c.to_string() + ",";

  std::uint64_t hash = 1469598103934665603ull;  // FNV offset basis
  for (unsigned char byte : text) {
    hash ^= byte;
    hash *= 1099511628211ull;  // FNV prime
  }
  return hash;
}

}  // namespace faulhaber
