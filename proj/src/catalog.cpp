#include "itersplit/catalog.hpp"

namespace itersplit {

Catalog::Catalog(std::filesystem::path path) : path_(std::move(path)) {
  if (std::ifstream in{path_}) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        CatalogEntry e = entry_from_json(Json::parse(line));
        keys_.insert(canonical_key(e.invariants));
        entries_.push_back(std::move(e));
      } catch (const Json::exception& ex) {
        throw ValidationError(path_.string() + ":" + std::to_string(lineno) + ": " + ex.what());
      }
    }
  }
  out_.open(path_, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open catalog " + path_.string());
}

bool Catalog::add(const CatalogEntry& e) {
  if (!keys_.insert(canonical_key(e.invariants)).second) return false;
  out_ << dump_line(to_json(e)) << '\n';
  out_.flush();
  entries_.push_back(e);
  return true;
}

CatalogCheck check_catalog(const std::filesystem::path& path) {
  std::ifstream in{path};
  if (!in) throw std::runtime_error("cannot open catalog " + path.string());
  CatalogCheck check;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ++check.entries;
    try {
      const CatalogEntry stored = entry_from_json(Json::parse(line));
      const CatalogEntry fresh = make_entry(stored.descriptor, true);
      if (dump_line(to_json(fresh)) != line) check.mismatched_lines.push_back(lineno);
    } catch (const std::exception&) {
      check.mismatched_lines.push_back(lineno);
    }
  }
  return check;
}

}  // namespace itersplit
