#ifndef GCA_GALLERY_HPP
#define GCA_GALLERY_HPP

#include "verify.hpp"

namespace gca {

/// A curated surface construction: a chain of named ideals (the scroll we
/// start from, an intermediate projected surface where one occurs, the
/// final surface and its hyperplane sections). Each construction carries
/// expected tables that check_gallery diffs against recomputed values.
struct Gallery {
  std::string id;
  std::vector<std::pair<std::string, Ideal>> stages;

  bool has(const std::string& name) const;
  const Ideal& get(const std::string& name) const;
};

/// All construction ids, in presentation order.
const std::vector<std::string>& gallery_ids();

/// Builds every stage of construction `id` over F_p. Stage names:
/// "scroll", optionally "mid", "surface", "section" (and "section2").
Gallery build_gallery(const std::string& id, std::uint32_t p = 32003);

/// Everything computed while checking a construction, kept for reuse by
/// the audit commands and the acceptance suite.
struct GalleryResult {
  Gallery gallery;
  Report report;
  std::map<std::string, BettiTable> betti;
  std::map<std::string, CohomologyProfile> profile;
  std::map<std::string, DerivedInvariants> invariants;
  std::optional<Thm63Signature> signature;  // of the final surface
  int d = 0;  // degree of the final surface
  int r = 0;  // its ambient projective dimension
};

/// Recomputes Betti diagrams, cohomology tables and derived invariants of
/// every stage and diffs them against the expected values.
GalleryResult check_gallery(const std::string& id, std::uint32_t p = 32003);

}  // namespace gca

#endif  // GCA_GALLERY_HPP
