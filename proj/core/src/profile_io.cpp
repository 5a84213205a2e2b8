#include "stmax/profile_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "stmax/errors.hpp"

namespace stmax {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  auto b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& s, int line, const std::string& key) {
  long long v = 0;
  auto t = trim(s);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ParseError("line " + std::to_string(line) + ": " + key + ": not an integer: '" + t + "'");
  return v;
}

bool parse_bool(const std::string& s, int line, const std::string& key) {
  auto t = trim(s);
  if (t == "true") return true;
  if (t == "false") return false;
  throw ParseError("line " + std::to_string(line) + ": " + key + ": expected true or false");
}

std::vector<long long> parse_int_list(const std::string& s, int line, const std::string& key) {
  std::vector<long long> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, line, key));
  return out;
}

}  // namespace

ProfileDocument parse_profile_document(std::istream& in) {
  ProfileDocument doc;
  SurfaceProfile& p = doc.profile;
  p.betti_f2 = {0, 0, 0, 0, 0};
  bool in_component = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s != "[component]")
        throw ParseError("line " + std::to_string(line) + ": unknown section '" + s + "'");
      p.real_components.push_back(RealComponent{});
      in_component = true;
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line) + ": expected 'key = value'");
    auto key = trim(s.substr(0, eq));
    auto val = trim(s.substr(eq + 1));
    if (in_component) {
      auto& c = p.real_components.back();
      if (key == "orientable") {
        c.orientable = parse_bool(val, line, key);
      } else if (key == "genus_or_crosscaps") {
        c.genus_or_crosscaps = parse_int(val, line, key);
      } else {
        throw ParseError("line " + std::to_string(line) + ": unknown component key '" + key + "'");
      }
      continue;
    }
    if (key == "name") {
      p.name = val;
    } else if (key == "betti_f2") {
      auto v = parse_int_list(val, line, key);
      if (v.size() != 5)
        throw ParseError("line " + std::to_string(line) + ": betti_f2: expected 5 integers");
      for (int i = 0; i < 5; ++i) p.betti_f2[i] = v[i];
    } else if (key == "tors2_h1") {
      p.tors2_h1 = parse_bool(val, line, key);
    } else if (key == "tors2_hstar") {
      p.tors2_hstar = parse_bool(val, line, key);
    } else if (key == "hodge") {
      auto v = parse_int_list(val, line, key);
      if (v.size() != 3)
        throw ParseError("line " + std::to_string(line) + ": hodge: expected h10, h20, h11");
      p.hodge = HodgeNumbers{v[0], v[1], v[2]};
    } else if (key == "rank_mu_hint") {
      if (!p.rank_mu_hint) p.rank_mu_hint = RankMuHint{};
      p.rank_mu_hint->value = parse_int(val, line, key);
    } else if (key == "rank_mu_note") {
      if (!p.rank_mu_hint) p.rank_mu_hint = RankMuHint{};
      p.rank_mu_hint->note = val;
    } else if (key == "fact_beta_star_hilb2") {
      doc.facts.beta_star_hilb2 = parse_int(val, line, key);
    } else if (key == "fact_rank_mu_lower_bound") {
      doc.facts.rank_mu_lower_bound = parse_int(val, line, key);
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  return doc;
}

ProfileDocument parse_profile_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open profile file: " + path);
  return parse_profile_document(in);
}

std::string render_profile_document(const ProfileDocument& doc) {
  const SurfaceProfile& p = doc.profile;
  std::ostringstream out;
  out << "name = " << p.name << "\n";
  out << "betti_f2 = " << p.betti_f2[0];
  for (int i = 1; i < 5; ++i) out << ", " << p.betti_f2[i];
  out << "\n";
  out << "tors2_h1 = " << (p.tors2_h1 ? "true" : "false") << "\n";
  out << "tors2_hstar = " << (p.tors2_hstar ? "true" : "false") << "\n";
  if (p.hodge)
    out << "hodge = " << p.hodge->h10 << ", " << p.hodge->h20 << ", " << p.hodge->h11 << "\n";
  if (p.rank_mu_hint) {
    out << "rank_mu_hint = " << p.rank_mu_hint->value << "\n";
    out << "rank_mu_note = " << p.rank_mu_hint->note << "\n";
  }
  if (doc.facts.beta_star_hilb2)
    out << "fact_beta_star_hilb2 = " << *doc.facts.beta_star_hilb2 << "\n";
  if (doc.facts.rank_mu_lower_bound)
    out << "fact_rank_mu_lower_bound = " << *doc.facts.rank_mu_lower_bound << "\n";
  for (const auto& c : p.real_components) {
    out << "[component]\n";
    out << "orientable = " << (c.orientable ? "true" : "false") << "\n";
    out << "genus_or_crosscaps = " << c.genus_or_crosscaps << "\n";
  }
  return out.str();
}

SurfaceProfile parse_profile(std::istream& in) { return parse_profile_document(in).profile; }

SurfaceProfile parse_profile_file(const std::string& path) {
  return parse_profile_document_file(path).profile;
}

std::string render_profile(const SurfaceProfile& p) {
  return render_profile_document(ProfileDocument{p, {}});
}

}  // namespace stmax
