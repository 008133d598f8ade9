#include "ips/datasets.hpp"

namespace ips {

namespace {

GridPointSet grid(long q, long denom, std::initializer_list<std::pair<long, long>> pts) {
  std::vector<GridPoint> v;
  for (const auto& [a, b] : pts) v.push_back({BigInt(a), BigInt(b)});
  return GridPointSet(BigInt(q), BigInt(denom), std::move(v));
}

std::vector<Dataset> build() {
  std::vector<Dataset> out;

  out.push_back({"char385",
                 "rails set of 16 points, characteristic 385, diameter 2189 (14 points on one line, 2 on the other)",
                 PointSetFile{kFormatVersion, "char385", "published rails set of characteristic 385",
                              {"listed as sqrt(385)/2 * {(+-1105, 48), (+-2189; 0), ...}"},
                              grid(385, 2,
                                   {{1105, 48}, {-1105, 48}, {2189, 0}, {-2189, 0}, {1587, 0}, {-1587, 0},
                                    {1269, 0}, {-1269, 0}, {763, 0}, {-763, 0}, {623, 0}, {-623, 0},
                                    {529, 0}, {-529, 0}, {339, 0}, {-339, 0}})},
                 true});

  // The second abscissa is printed as 2227^2 * 10.
  constexpr long kHeptagonX2 = 2227L * 2227L * 10L;
  out.push_back({"heptagon",
                 "7 points in general position, characteristic 2002, digits exactly as printed "
                 "(they do not verify: see heptagon_fixed)",
                 PointSetFile{kFormatVersion, "heptagon", "published heptagon M_7",
                              {"listed as sqrt(2002)/2227 * {...}; the 2*2227 grid form reduces to denom 2227",
                               "digits as printed; the last point fails integrality against points 3-6"},
                              grid(2002, 2227,
                                   {{0, 0},
                                    {kHeptagonX2, 0},
                                    {26127018, 932064},
                                    {32142553, 411864},
                                    {17615968, 238464},
                                    {7344908, 411864},
                                    {19079044, 54168}})},
                 false});

  out.push_back({"heptagon_fixed",
                 "the heptagon with the sign of the last ordinate flipped; every distance is an integer",
                 PointSetFile{kFormatVersion, "heptagon_fixed", "published heptagon M_7",
                              {"identical to 'heptagon' except (19079044; 54168) -> (19079044; -54168)"},
                              grid(2002, 2227,
                                   {{0, 0},
                                    {kHeptagonX2, 0},
                                    {26127018, 932064},
                                    {32142553, 411864},
                                    {17615968, 238464},
                                    {7344908, 411864},
                                    {19079044, -54168}})},
                 true});

  out.push_back({"rails255255",
                 "rails set P_{3,8}: 3 points on one line, 8 on the other, characteristic 255255",
                 PointSetFile{kFormatVersion, "rails255255", "published rails set P_{3,8}",
                              {"listed as sqrt(255255)/2 * {(1767; -3), ...}"},
                              grid(255255, 2,
                                   {{1767, -3}, {2791, -3}, {4071, -3}, {-306, 0}, {0, 0}, {1798, 0},
                                    {2304, 0}, {2760, 0}, {3534, 0}, {4040, 0}, {4558, 0}})},
                 true});
  return out;
}

}  // namespace

const std::vector<Dataset>& embedded_datasets() {
  static const std::vector<Dataset> sets = build();
  return sets;
}

const Dataset& find_dataset(std::string_view name) {
  for (const auto& ds : embedded_datasets()) {
    if (ds.name == name) return ds;
  }
  throw IpsError(ErrorKind::NotApplicable, "unknown dataset '" + std::string(name) + "'");
}

std::string dataset_status(const Dataset& ds) {
  try {
    const auto rep = classify(ds.file.set);
    if (rep.is_integral && rep.characteristic) return "verified";
  } catch (const IpsError&) {
  }
  return "unverified-as-transcribed";
}

}  // namespace ips
