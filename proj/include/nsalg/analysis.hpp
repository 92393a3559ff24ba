#pragma once

#include "nsalg/gamma.hpp"
#include "nsalg/report.hpp"
#include "nsalg/smash.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace nsalg {

/// Key range [kmin, kmax]; only keys at least `margin` away from both ends
/// (the interior) are tested.
struct Window {
  int kmin = -10;
  int kmax = 10;
  int margin = 3;

  int lo() const { return kmin + margin; }
  int hi() const { return kmax - margin; }
  /// Throws Error unless kmin <= kmax, margin >= 0 and the interior is nonempty.
  void validate() const;
  std::string str() const;  // "-10..10 (margin 3)"
  /// "A..B"
  static Window parse(std::string_view range, int margin);
};

/// Admissible keys of m with lo() <= k <= hi(), in key order.
std::vector<BasisKey> interior_keys(const GammaModule& m, const Window& w);

/// L_n, G_r with |index| <= gen_range; index >= -1 in kplus mode. No C.
std::vector<Generator> sweep_generators(AlgebraMode mode, int gen_range);

// ---------------------------------------------------------------------------
// Algebra identities

/// Graded Jacobi on all basis triples of khat with |index| <= range, one
/// report per family of generator kinds.
std::vector<CheckReport> verify_jacobi(int range);

struct CatalogueOptions {
  /// Coefficient in front of the G-L sum on the right of the [Omega, G] chain.
  Rational chain_coefficient{3, 2};
  /// Replacement for L'_{-1} in the reconstruction checks.
  std::optional<SmashElement> l_prime_minus_one;
  Window window{};
  int sweep = 2;
  int psi_bound = 5;
  int centralizer_k = 6;
  int max_m = 6;
  /// Also attempt the module-level chains as identities in A.U(k) (info only).
  bool algebra_level_attempts = true;
};

std::vector<CheckReport> verify_identity_catalogue(int maxN, const CatalogueOptions& opts = {});

/// Residuals of x(y e) - (-1)^{|x||y|} y(x e) - [x,y] e over all unordered
/// generator pairs of the sweep and all interior keys. One report per pair.
std::vector<CheckReport> verify_module_axiom(const GammaModule& m, const Window& w, int gen_range);

// ---------------------------------------------------------------------------
// Simplicity

struct EdgeRecord {
  BasisKey source;
  BasisKey target;
  Generator generator;
  Scalar coefficient;
};

/// Nonzero action edges between interior keys.
std::vector<EdgeRecord> interior_edges(const GammaModule& m, const Window& w, int gen_range);

std::set<BasisKey> reachability_closure(const GammaModule& m, const BasisKey& seed, const Window& w,
                                        int gen_range);

struct Verdict {
  enum class Kind { Simple, Reducible, Inconclusive };
  Kind kind = Kind::Inconclusive;
  /// Proper out-closed subset of interior keys (reducible only).
  std::vector<BasisKey> certificate;
  /// Formal parameters: parameter equations that isolate a key.
  std::vector<std::string> locus;
  Window window;
  std::string note;

  std::string str() const;
};

std::string to_string(Verdict::Kind k);

Verdict simplicity_verdict(const GammaModule& m, const Window& w, int gen_range);

/// Direct re-evaluation: no generator maps a certificate key to an interior
/// key outside it. On failure `witness` names the offending edge.
bool certificate_out_closed(const GammaModule& m, const std::vector<BasisKey>& certificate, const Window& w,
                            int gen_range, std::string* witness = nullptr);

// ---------------------------------------------------------------------------
// Isomorphisms

struct Intertwiner {
  /// Doubled weight shift (lambda2 + b2) - (lambda1 + b1).
  int doubled_shift = 0;
  /// 1 when the map reverses parity.
  int parity = 0;
  std::vector<std::tuple<BasisKey, BasisKey, Scalar>> table;

  std::string str() const;
};

/// Diagonal map e_v -> c_v e_{sigma(v)} commuting (with Koszul sign) with all
/// sweep generators on the interior of w. Numeric parameters only.
std::optional<Intertwiner> find_intertwiner(const GammaModule& m1, const GammaModule& m2, const Window& w,
                                            int gen_range, std::string* reason = nullptr);

// ---------------------------------------------------------------------------
// Annihilators

struct AnnihilatorResult {
  int m = 0;
  /// Omega^{(m-1)} applied to some interior vector, nonzero (absent when m = 1).
  std::optional<std::string> minimality_witness;
  /// The G-L sums at order m.
  CheckReport gl_report;
};

/// Smallest m <= max_m with Omega^{(m)}_{k,s} (Omega_{k+m-1,s-1} in kplus mode)
/// killing every interior vector for all sweep indices.
AnnihilatorResult minimal_annihilator(const GammaModule& m, const Window& w, int max_m, int sweep = 2);

// ---------------------------------------------------------------------------
// Suites built from the engines

/// Reducibility grid over lambda in {-1,0,1/3,1,7/5}, b in {-1,0,1/4,1/2,1}.
std::vector<CheckReport> reducibility_grid(const Window& w, int gen_range);

/// The positive and negative isomorphism pairs, both orientations.
std::vector<CheckReport> isomorphism_suite(const Window& w, int gen_range);

struct ClassificationRow {
  std::string algebra;
  std::string family;
  std::string condition;
  std::string verdict;
  /// Name of the certifying check; empty for out-of-scope rows.
  std::string check;
};

std::vector<ClassificationRow> classification_table();

/// Checks named by the table rows.
std::vector<CheckReport> classification_checks(const Window& w, int gen_range);

std::string render_classification(const std::vector<ClassificationRow>& rows);

}  // namespace nsalg
