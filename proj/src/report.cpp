#include "wqh/report.hpp"

#include <algorithm>
#include <sstream>

namespace wqh {

Check& Report::entry(const std::string& id) {
  for (auto& c : checks_)
    if (c.id == id) return c;
  Check c;
  c.id = id;
  checks_.push_back(std::move(c));
  return checks_.back();
}

void Report::observe(const std::string& id, const std::vector<long>& where, bool ok, double deviation) {
  Check& c = entry(id);
  c.worst_deviation = std::max(c.worst_deviation, deviation);
  if (ok) return;
  c.pass = false;
  if (c.witness_indices.size() < kMaxWitnesses) c.witness_indices.push_back(where);
}

void Report::fail(const std::string& id, const std::vector<long>& where, const std::string& note) {
  observe(id, where, false);
  if (!note.empty()) this->note(id, note);
}

void Report::note(const std::string& id, const std::string& text) {
  Check& c = entry(id);
  if (!c.note.empty()) c.note += "; ";
  c.note += text;
}

void Report::merge(const Report& other) {
  for (const auto& o : other.checks_) {
    Check& c = entry(o.id);
    c.pass = c.pass && o.pass;
    c.worst_deviation = std::max(c.worst_deviation, o.worst_deviation);
    for (const auto& w : o.witness_indices)
      if (c.witness_indices.size() < kMaxWitnesses) c.witness_indices.push_back(w);
    if (!o.note.empty()) note(o.id, o.note);
  }
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

bool Report::passed(const std::string& id) const {
  const Check* c = find(id);
  return c != nullptr && c->pass;
}

std::string Report::human() const {
  std::size_t width = 8;
  for (const auto& c : checks_) width = std::max(width, c.id.size());
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << c.id << std::string(width - c.id.size() + 2, ' ') << (c.pass ? "PASS" : "FAIL");
    os << "  dev=" << c.worst_deviation;
    if (!c.witness_indices.empty()) {
      os << "  at";
      for (std::size_t k = 0; k < std::min<std::size_t>(c.witness_indices.size(), 4); ++k) {
        os << " (";
        for (std::size_t j = 0; j < c.witness_indices[k].size(); ++j)
          os << (j ? "," : "") << c.witness_indices[k][j];
        os << ")";
      }
    }
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace wqh
