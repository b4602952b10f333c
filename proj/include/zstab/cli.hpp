#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: workspace loading, reports, reproductions.
 *
 * Exit codes: 0 success / PASS, 1 reproduction FAIL, 2 parse error,
 * 3 precondition failure, 4 NotUnique, 5 NoStablePiece, 6 NonEffective.
 */

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "zstab/charge.hpp"
#include "zstab/filtr.hpp"
#include "zstab/io.hpp"

namespace zstab::cli {

enum Exit : int {
  kOk = 0,
  kReproFail = 1,
  kParse = 2,
  kPrecondition = 3,
  kNotUnique = 4,
  kNoStablePiece = 5,
  kNonEffective = 6,
};

/**
 * Identifier-keyed objects from one or more JSON documents of the form
 * {"rings": {...}, "classes": {...}, "charges": {...}, "gammas": {...},
 *  "lattices": {...}}. Every non-ring entry names its ring with "ring".
 */
class Workspace {
 public:
  /// Merges the documents; duplicate identifiers are a ParseError. With
  /// validate_rings, a ring failing validate_ring is a PreconditionError.
  static Workspace from_json(const std::vector<io::Json>& docs, bool validate_rings = true);
  static Workspace load(const std::vector<std::string>& files, bool validate_rings = true);

  const std::map<std::string, RingPtr>& rings() const noexcept { return rings_; }
  const std::map<std::string, SheafClass>& classes() const noexcept { return classes_; }

  const RingPtr& ring(const std::string& id) const;
  const SheafClass& sheaf(const std::string& id) const;
  const ChargeData& charge(const std::string& id) const;
  const GammaSpec& gamma(const std::string& id) const;
  const SubobjectLattice& lattice(const std::string& id) const;

 private:
  std::map<std::string, RingPtr> rings_;
  std::map<std::string, SheafClass> classes_;
  std::map<std::string, ChargeData> charges_;
  std::map<std::string, GammaSpec> gammas_;
  std::map<std::string, SubobjectLattice> lattices_;
};

struct OutputOptions {
  bool json = false;
  bool approx = false;  ///< add "<key>_approx" decimal siblings
};

/// Writes a report as pretty JSON or as indented "key: value" text.
void emit(std::ostream& out, const io::Json& report, const OutputOptions& opt);

/// Copy of the report with decimal approximations next to rational strings.
io::Json with_approximations(const io::Json& report);

struct ReproResult {
  bool pass = false;
  io::Json report;
};

ReproResult repro_dhym_counterexample(int n);
ReproResult repro_gieseker_p2();
ReproResult repro_leung_vector(int n);
ReproResult repro_bayer_lemma_grid(int bound, int max_dim);

/// Parses "[a,b],[c,d],..." into Gaussian rationals. Throws ParseError.
std::vector<GaussianRational> parse_rho_list(const std::string& text);

/// Runs the tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zstab::cli
