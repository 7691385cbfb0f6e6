#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "faulhaber/faulhaber_form.hpp"
#include "faulhaber/generators.hpp"
#include "faulhaber/oracle.hpp"

namespace faulhaber {

enum class Format { plain, latex, json, csv };

std::string to_string(GeneratorKind kind);
std::string to_string(Parity parity);
GeneratorKind generator_kind_from_string(const std::string& s);

/// Serializable view of one generated power sum: the factored Faulhaber data
/// (factor and F coefficients) plus the reduced-form coefficient lists. All
/// rationals travel as "p/q" strings, ascending degree.
struct OutputRecord {
  unsigned k = 0;
  Parity parity = Parity::odd;
  std::string factor;                 // "S1^2", "S2" or "S1" (k = 1 only)
  std::vector<std::string> f_coeffs;  // coefficients of F
  std::vector<std::string> a_coeffs;  // S2-free part of the reduced form
  std::vector<std::string> b_coeffs;  // S2 coefficient of the reduced form
  GeneratorKind generator = GeneratorKind::standard;

  nlohmann::ordered_json to_json() const;
  static OutputRecord from_json(const nlohmann::json& j);

  /// Reduced ring element rebuilt from a_coeffs/b_coeffs.
  ReducedPowerPoly reconstruct_reduced() const;
  /// The same element rebuilt from factor * F; always equals the above.
  ReducedPowerPoly reconstruct_factored() const;
};

OutputRecord make_output_record(unsigned k, const ReducedPowerPoly& p, GeneratorKind kind);

/// Distributed reduced form, e.g. "S9 = -3/5 S1^2 + 12/5 S1^3 - 4 S1^4 + 16/5 S1^5".
std::string render_plain(unsigned k, const ReducedPowerPoly& p);

/// Factored form with the smallest common denominator pulled out, e.g.
/// "\frac{1}{5}S_1^2\left(-3 + 12 S_1 - 20 S_1^2 + 16 S_1^3\right)".
std::string render_latex(unsigned k, const ReducedPowerPoly& p);

/// One CSV row "k,factor,c0;c1;...".
std::string render_csv_row(const OutputRecord& rec);
extern const char* const kTableCsvHeader;  // "k,factor,coefficients"

std::string render_table_plain(const std::vector<OutputRecord>& rows);
std::string render_table_csv(const std::vector<OutputRecord>& rows);
std::string render_table_jsonl(const std::vector<OutputRecord>& rows);

nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// FNV-1a over the canonical coefficient serialization; equal polynomials
/// hash equal regardless of which generator produced them.
std::uint64_t canonical_hash(const ReducedPowerPoly& p);

}  // namespace faulhaber
