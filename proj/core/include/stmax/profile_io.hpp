#pragma once

#include <iosfwd>
#include <string>

#include "stmax/hilb_square.hpp"
#include "stmax/surface_profile.hpp"

namespace stmax {

// A profile file may also carry externally established facts consumed by the
// Hilbert-square verdict (keys fact_beta_star_hilb2, fact_rank_mu_lower_bound).
struct ProfileDocument {
  SurfaceProfile profile;
  Hilb2Facts facts;

  friend bool operator==(const ProfileDocument&, const ProfileDocument&) = default;
};

// Line-oriented profile syntax: `key = value` pairs, `#` comments, and one
// `[component]` section per real component. parse(render(p)) == p for every
// valid profile.
ProfileDocument parse_profile_document(std::istream& in);
ProfileDocument parse_profile_document_file(const std::string& path);
std::string render_profile_document(const ProfileDocument& doc);

SurfaceProfile parse_profile(std::istream& in);
SurfaceProfile parse_profile_file(const std::string& path);
std::string render_profile(const SurfaceProfile& p);

}  // namespace stmax
