#pragma once

#include <nielsen/model.hpp>
#include <nielsen/reid_graph.hpp>
#include <nielsen/spectrum.hpp>
#include <nielsen/validators.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace nielsen {

enum class EqualityStatus { trivially_equal, equal, unequal };

const char* to_string(EqualityStatus s);

inline constexpr std::uint64_t default_max_exponent = 10000;

/// Attachments realizing the graph on a horizon, with their verification.
struct EqualityCertificate {
  std::uint64_t horizon = 1;
  std::uint64_t period_lcm = 1;  // d = lcm of the unity periods
  std::vector<Attachment> attachments;
  RealizationReport report;
  BigInt nf;
};

/// Exponents r_1 < ... < r_v coprime to |G| and to every unity period, with
/// ind(f^r; [0]) = L(f^r)/|G| taking more distinct values than any smoothly
/// realizable sequence in dimension m can.
struct InequalityCertificate {
  std::vector<std::uint64_t> exponents;
  std::vector<BigInt> index_values;
  std::uint64_t distinct_count = 0;
  std::uint64_t bound = 0;
  BigInt witness_horizon = 1;  // lcm of the exponents
  std::vector<std::uint64_t> avoided_primes;
  std::uint64_t max_exponent = 0;
  bool complete = false;
};

struct EqualityVerdict {
  EqualityStatus status = EqualityStatus::unequal;
  SpectrumClassification spectrum;
  std::optional<EqualityCertificate> equality;
  std::optional<InequalityCertificate> inequality;
  /// The witness scan hit max_exponent; the status still follows from the
  /// spectrum.
  bool certificate_incomplete = false;
  ValidatorReport diagnostics;
};

/// NF_n = NJD_n for every n iff L(f) = 0 or every eigenvalue of A has modulus
/// <= 1. Builds the matching certificate; `n` defaults to d in the equal
/// branch.
EqualityVerdict decide_equality(const Model& model, std::optional<std::uint64_t> n = std::nullopt,
                                std::uint64_t max_exponent = default_max_exponent);

/// Ascending scan of r = 1..max_exponent. Throws SearchCapExceeded when the
/// bound is not beaten, InvalidInput when the spectrum has no eigenvalue of
/// modulus > 1 or L(f) = 0.
InequalityCertificate witness_search(const Model& model,
                                     std::uint64_t max_exponent = default_max_exponent);

/// Independent check of an inequality certificate against the model.
bool check_inequality_certificate(const Model& model, const InequalityCertificate& cert);

struct NfNjdSummary {
  std::uint64_t horizon = 1;
  BigInt nf;
  /// Exact NJD_n when the equality holds.
  std::optional<BigInt> njd;
  /// Unequal branch: NJD_n >= NF_n, and NJD > NF at witness_horizon.
  bool njd_lower_bound_only = false;
  std::optional<BigInt> witness_horizon;
  EqualityStatus status = EqualityStatus::unequal;
  bool certificate_incomplete = false;
};

NfNjdSummary nf_njd_summary(const Model& model, std::uint64_t n,
                            std::uint64_t max_exponent = default_max_exponent);

/// PSU(2)^s with A(f) = alpha: pi_1 = Z_2^s, dimension 3s. Requires
/// alpha = I (mod 2) so that f_# = id; throws InvalidInput otherwise.
Model psu2_fixture(const IntMatrix& alpha);

}  // namespace nielsen
