#include "ips/io.hpp"

#include <fstream>
#include <sstream>

namespace ips {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw IpsError(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

GridPoint parse_point(const std::string& raw, std::size_t line) {
  std::string s = raw;
  for (char& c : s) {
    if (c == '(' || c == ')' || c == ';' || c == ',') c = ' ';
  }
  std::istringstream is(s);
  std::string a, b, extra;
  if (!(is >> a >> b) || (is >> extra)) fail(line, "expected a point \"a b\", got '" + raw + "'");
  try {
    return {parse_bigint(a), parse_bigint(b)};
  } catch (const IpsError& e) {
    fail(line, e.what());
  }
}

}  // namespace

PointSetFile parse_point_set(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::optional<BigInt> q, denom;
  std::optional<std::size_t> expected;
  bool in_points = false;
  int version = kFormatVersion;
  std::optional<std::string> name, source;
  std::vector<std::string> notes;
  std::vector<GridPoint> points;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (in_points && (!expected || points.size() < *expected)) {
      points.push_back(parse_point(line, line_no));
      continue;
    }
    const auto sp = line.find_first_of(" \t");
    const std::string key = line.substr(0, sp);
    const std::string value = sp == std::string::npos ? std::string() : trim(line.substr(sp));
    auto integer = [&]() {
      try {
        return parse_bigint(value);
      } catch (const IpsError& e) {
        fail(line_no, key + ": " + e.what());
      }
    };
    if (key == "format_version") {
      const BigInt v = integer();
      if (v != kFormatVersion) fail(line_no, "unsupported format_version " + value);
      version = static_cast<int>(v.get_si());
    } else if (key == "name") {
      name = value;
    } else if (key == "source") {
      source = value;
    } else if (key == "note") {
      notes.push_back(value);
    } else if (key == "q") {
      q = integer();
    } else if (key == "denom") {
      denom = integer();
    } else if (key == "points") {
      if (in_points) fail(line_no, "duplicate points section");
      in_points = true;
      if (!value.empty()) {
        const BigInt n = integer();
        if (n < 0 || !n.fits_ulong_p()) fail(line_no, "bad point count " + value);
        expected = n.get_ui();
      }
    } else {
      fail(line_no, "unknown field '" + key + "'");
    }
  }
  if (!q) throw IpsError(ErrorKind::Parse, "missing field 'q'");
  if (!denom) throw IpsError(ErrorKind::Parse, "missing field 'denom'");
  if (!in_points) throw IpsError(ErrorKind::Parse, "missing 'points' section");
  if (expected && points.size() != *expected) {
    throw IpsError(ErrorKind::Parse, "expected " + std::to_string(*expected) + " points, found " +
                                         std::to_string(points.size()));
  }
  try {
    return PointSetFile{version, std::move(name), std::move(source), std::move(notes),
                        GridPointSet(*q, *denom, std::move(points))};
  } catch (const IpsError& e) {
    throw IpsError(ErrorKind::Parse, std::string("invalid point set: ") + e.what());
  }
}

std::string serialize_point_set(const PointSetFile& file) {
  std::ostringstream os;
  os << "# integral point set: point i is (a_i/denom, b_i*sqrt(q)/denom)\n";
  os << "format_version " << file.format_version << '\n';
  if (file.name) os << "name " << *file.name << '\n';
  if (file.source) os << "source " << *file.source << '\n';
  for (const auto& n : file.notes) os << "note " << n << '\n';
  os << "q " << to_string(file.set.radicand()) << '\n';
  os << "denom " << to_string(file.set.denom()) << '\n';
  os << "points " << file.set.size() << '\n';
  for (const auto& p : file.set.points()) os << to_string(p.a) << ' ' << to_string(p.b) << '\n';
  return os.str();
}

PointSetFile read_point_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IpsError(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_point_set(ss.str());
}

void write_point_set_file(const std::string& path, const PointSetFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IpsError(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << serialize_point_set(file);
}

}  // namespace ips
