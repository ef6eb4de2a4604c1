#include "tcat/text.hpp"

#include <sstream>

namespace tcat {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

[[noreturn]] void fail(const std::string& what, const std::string& input, size_t pos) {
  std::ostringstream os;
  os << what << " in \"" << input << "\" at position " << pos;
  throw std::invalid_argument(os.str());
}

YoungDiagram parse_diagram_inner(const std::string& s, const std::string& context, size_t offset) {
  std::string trimmed;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  if (trimmed.empty() || trimmed == "-") return {};
  std::vector<int> parts;
  size_t i = 0;
  while (i < trimmed.size()) {
    if (!isdigit(static_cast<unsigned char>(trimmed[i])))
      fail("expected digit", context, offset + i);
    size_t j = i;
    long v = 0;
    while (j < trimmed.size() && isdigit(static_cast<unsigned char>(trimmed[j]))) {
      v = v * 10 + (trimmed[j] - '0');
      if (v > 1000000) fail("part too large", context, offset + i);
      ++j;
    }
    parts.push_back(static_cast<int>(v));
    if (j < trimmed.size()) {
      if (trimmed[j] != '.' && trimmed[j] != ',') fail("expected '.' or ','", context, offset + j);
      ++j;
      if (j == trimmed.size()) fail("trailing separator", context, offset + j - 1);
    }
    i = j;
  }
  try {
    return YoungDiagram(parts);
  } catch (const std::invalid_argument& e) {
    fail(e.what(), context, offset);
  }
}

}  // namespace

YoungDiagram parse_diagram(const std::string& s) { return parse_diagram_inner(s, s, 0); }

std::string format_diagram(const YoungDiagram& d, char sep) {
  if (d.empty()) return "-";
  std::ostringstream os;
  for (int i = 0; i < d.rows(); ++i) {
    if (i) os << sep;
    os << d.part(i);
  }
  return os.str();
}

DiagramTuple parse_tuple(const std::string& s, int t) {
  if (t < 0) throw std::invalid_argument("parse_tuple: t must be >= 0");
  auto sections = split(s, '|');
  if (sections.size() != 3)
    fail("expected three '|'-separated sections", s, s.find('|') == std::string::npos ? 0 : s.size());
  auto left_entries = split(sections[0], ',');
  auto inner_entries = split(sections[1], ';');
  auto right_entries = split(sections[2], ',');
  if (static_cast<int>(left_entries.size()) != t + 1)
    fail("left section needs t+1 comma-separated diagrams", s, 0);
  if (inner_entries.size() != 2)
    fail("inner section needs two ';'-separated diagrams", s, sections[0].size() + 1);
  if (static_cast<int>(right_entries.size()) != t + 1)
    fail("right section needs t+1 comma-separated diagrams", s,
         sections[0].size() + sections[1].size() + 2);
  DiagramTuple x = trivial_tuple(t);
  // display order runs λ_t..λ_0 on the left, μ_0..μ_t on the right
  for (int i = 0; i <= t; ++i)
    x.left[static_cast<size_t>(t - i)] = parse_diagram_inner(left_entries[static_cast<size_t>(i)], s, 0);
  x.inner_left = parse_diagram_inner(inner_entries[0], s, sections[0].size() + 1);
  x.inner_right = parse_diagram_inner(inner_entries[1], s, sections[0].size() + 1);
  for (int i = 0; i <= t; ++i)
    x.right[static_cast<size_t>(i)] =
        parse_diagram_inner(right_entries[static_cast<size_t>(i)], s,
                            sections[0].size() + sections[1].size() + 2);
  return x;
}

std::string format_tuple(const DiagramTuple& x) {
  std::ostringstream os;
  for (int i = x.t(); i >= 0; --i) {
    os << format_diagram(x.left[static_cast<size_t>(i)]);
    if (i) os << ",";
  }
  os << "|" << format_diagram(x.inner_left) << ";" << format_diagram(x.inner_right) << "|";
  for (int i = 0; i <= x.t(); ++i) {
    if (i) os << ",";
    os << format_diagram(x.right[static_cast<size_t>(i)]);
  }
  return os.str();
}

DegreeVector parse_degree(const std::string& s, int t) {
  auto sections = split(s, '|');
  if (sections.size() != 3) fail("expected three '|'-separated sections", s, 0);
  auto left_entries = split(sections[0], ',');
  auto inner_entries = split(sections[1], ';');
  auto right_entries = split(sections[2], ',');
  if (static_cast<int>(left_entries.size()) != t + 1 || inner_entries.size() != 2 ||
      static_cast<int>(right_entries.size()) != t + 1)
    fail("degree vector has wrong shape for t", s, 0);
  auto num = [&](const std::string& e) {
    try {
      size_t used = 0;
      int v = std::stoi(e, &used);
      if (used != e.size() || v < 0) fail("expected nonnegative integer", s, 0);
      return v;
    } catch (const std::invalid_argument&) {
      fail("expected nonnegative integer", s, 0);
    } catch (const std::out_of_range&) {
      fail("integer out of range", s, 0);
    }
  };
  DegreeVector v = zero_degree(t);
  for (int i = 0; i <= t; ++i) v.left[static_cast<size_t>(t - i)] = num(left_entries[static_cast<size_t>(i)]);
  v.l = num(inner_entries[0]);
  v.m = num(inner_entries[1]);
  for (int i = 0; i <= t; ++i) v.right[static_cast<size_t>(i)] = num(right_entries[static_cast<size_t>(i)]);
  return v;
}

std::string format_degree(const DegreeVector& v) {
  std::ostringstream os;
  for (int i = v.t(); i >= 0; --i) os << v.left[static_cast<size_t>(i)] << (i ? "," : "");
  os << "|" << v.l << ";" << v.m << "|";
  for (int i = 0; i <= v.t(); ++i) os << (i ? "," : "") << v.right[static_cast<size_t>(i)];
  return os.str();
}

std::string format_mult(const Mult& m) { return m.str(); }

std::string format_seq_ext(const Seq& ext) {
  std::ostringstream os;
  for (size_t i = ext.size(); i-- > 0;) {
    os << format_diagram(ext[i]);
    if (i) os << ",";
  }
  return os.str();
}

}  // namespace tcat
