// Copyright 2026 The circdd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circdd/builtin_records.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "circdd/circulant_graph.hpp"
#include "circdd/constructions.hpp"

namespace circdd {
namespace {

// degree, diameter, order, generators, optimal
constexpr PublishedSet kPublishedSets[] = {
    {7, 6, 536, {1, 231, 239, 268}, true},
    {7, 7, 828, {1, 9, 91, 414}, true},
    {7, 8, 1232, {1, 11, 111, 616}, true},
    {7, 9, 1764, {1, 803, 815, 882}, true},
    {7, 10, 2392, {1, 13, 183, 1196}, true},
    {8, 3, 104, {1, 16, 20, 27}, true},
    {8, 4, 248, {1, 61, 72, 76}, true},
    {8, 5, 528, {1, 89, 156, 162}, true},
    {8, 5, 511, {1, 5, 70, 96}, false},
    {8, 6, 967, {1, 7, 132, 182}, false},
    {8, 7, 1545, {1, 170, 178, 468}, false},
    {9, 4, 320, {1, 15, 25, 83, 160}, true},
    {9, 5, 684, {1, 111, 145, 279, 342}, false},
    {9, 6, 1284, {1, 36, 163, 342, 642}, false},
    {9, 7, 2340, {1, 149, 157, 645, 1170}, false},
    {10, 4, 457, {1, 20, 130, 147, 191}, false},
    {10, 5, 1099, {1, 53, 207, 272, 536}, true},
    {10, 6, 1533, {3, 15, 210, 288, 511}, false},
    {10, 7, 2925, {25, 351, 400, 468, 550}, false},
    {10, 8, 5136, {3, 645, 1712, 1824, 1848}, false},
    {10, 9, 8560, {5, 1075, 1712, 3040, 3080}, false},
    {10, 10, 13840, {5, 1032, 2768, 5360, 5400}, false},
    {11, 3, 210, {1, 49, 59, 84, 89, 105}, true},
    {11, 4, 576, {1, 9, 75, 155, 179, 288}, false},
    {11, 5, 1380, {1, 33, 173, 387, 663, 690}, false},
    {11, 6, 2100, {3, 15, 591, 669, 700, 1050}, false},
    {11, 7, 4088, {8, 40, 511, 560, 768, 2044}, false},
    {11, 8, 7736, {8, 56, 967, 1056, 1456, 3868}, false},
    {11, 9, 13400, {25, 1608, 2144, 5775, 5975, 6700}, false},
    {11, 10, 21976, {41, 2144, 2680, 9471, 9799, 10988}, false},
    {12, 3, 275, {1, 16, 19, 29, 86, 110}, false},
    {12, 4, 761, {1, 12, 184, 235, 334, 362}, false},
    {12, 5, 1800, {1, 30, 64, 384, 761, 841}, false},
    {12, 6, 3297, {3, 159, 621, 816, 1099, 1608}, false},
    {12, 7, 6864, {13, 1056, 1157, 1584, 2028, 2106}, false},
    {12, 8, 13200, {25, 1584, 2112, 2225, 3900, 4050}, false},
    {12, 9, 24600, {25, 2952, 3936, 4075, 8700, 8850}, false},
    {12, 10, 42800, {25, 5136, 5375, 6848, 15200, 15400}, false},
    {13, 2, 80, {1, 3, 9, 20, 25, 33, 40}, false},
    {13, 3, 312, {1, 14, 74, 77, 130, 138, 156}, false},
    {13, 4, 920, {1, 11, 38, 176, 232, 376, 460}, false},
    {13, 5, 1828, {4, 80, 457, 520, 588, 764, 914}, false},
    {13, 6, 4396, {4, 212, 828, 1088, 1099, 2144, 2198}, false},
    {13, 7, 9100, {13, 65, 1400, 2100, 2561, 2899, 4550}, false},
    {13, 8, 18720, {117, 160, 585, 2560, 3520, 3627, 9360}, false},
    {13, 9, 36036, {117, 308, 819, 4928, 5031, 6776, 18018}, false},
    {13, 10, 63700, {25, 175, 7644, 10192, 13025, 14275, 31850}, false},
    {14, 2, 90, {1, 4, 10, 17, 26, 29, 41}, true},
    {14, 3, 381, {1, 11, 103, 120, 155, 161, 187}, true},
    {14, 4, 825, {3, 48, 57, 87, 258, 275, 330}, true},
    {14, 5, 2285, {5, 100, 457, 650, 735, 914, 955}, true},
    {14, 6, 5941, {13, 260, 914, 1371, 1690, 1911, 2483}, true},
    {14, 7, 14287, {13, 689, 2198, 2691, 3297, 3536, 6968}, true},
    {14, 8, 29016, {117, 248, 3968, 5456, 7137, 8424, 8892}, true},
    {14, 9, 54120, {55, 984, 4920, 8965, 19140, 19470, 20664}, false},
    {14, 10, 113139, {117, 819, 967, 15444, 15472, 21274, 21294}, false},
    {15, 2, 96, {1, 3, 5, 11, 24, 31, 39, 48}, false},
    {15, 3, 448, {1, 10, 127, 150, 176, 189, 217, 224}, true},
    {15, 4, 1100, {4, 64, 76, 116, 275, 344, 440, 550}, false},
    {15, 5, 2880, {5, 45, 375, 576, 775, 895, 1152, 1440}, false},
    {15, 6, 7488, {13, 117, 975, 1152, 1728, 2015, 2327, 3744}, false},
    {15, 7, 17584, {16, 848, 1099, 3297, 3312, 4352, 8576, 8792}, false},
    {15, 8, 39564, {36, 1099, 1908, 5495, 7452, 9792, 19296, 19782}, false},
    {15, 9, 81900, {117, 585, 700, 11200, 15400, 23049, 26091, 40950}, false},
    {15, 10, 154720, {160, 967, 1120, 4835, 21120, 29120, 29977, 77360}, false},
};

// degree, diameter, order, citation
constexpr PublishedOrder kPublishedOrders[] = {
    {3, 2, 8, ""},
    {3, 3, 12, ""},
    {3, 4, 16, ""},
    {3, 5, 20, ""},
    {3, 6, 24, ""},
    {3, 7, 28, ""},
    {3, 8, 32, ""},
    {3, 9, 36, ""},
    {3, 10, 40, ""},
    {4, 2, 13, ""},
    {4, 3, 25, ""},
    {4, 4, 41, ""},
    {4, 5, 61, ""},
    {4, 6, 85, ""},
    {4, 7, 113, ""},
    {4, 8, 145, ""},
    {4, 9, 181, ""},
    {4, 10, 221, ""},
    {5, 2, 16, ""},
    {5, 3, 36, "Mac10"},
    {5, 4, 64, "Mac10"},
    {5, 5, 100, "Mac10"},
    {5, 6, 144, "Mac10"},
    {5, 7, 196, "Mac10"},
    {5, 8, 256, "Mac10"},
    {5, 9, 324, "Mac10"},
    {5, 10, 400, "Mac10"},
    {6, 2, 21, "Del13"},
    {6, 3, 55, "Del13"},
    {6, 4, 117, "Del13"},
    {6, 5, 203, "Del13"},
    {6, 6, 333, "Mac10"},
    {6, 7, 515, "Mac10"},
    {6, 8, 737, "Mac10"},
    {6, 9, 1027, "Mac10"},
    {6, 10, 1393, "Mona12"},
    {7, 2, 26, "Del13"},
    {7, 3, 76, "Mac10"},
    {7, 4, 160, "Mac10"},
    {7, 5, 308, "Mac10"},
    {7, 6, 536, "sets"},
    {7, 7, 828, "sets"},
    {7, 8, 1232, "sets"},
    {7, 9, 1764, "sets"},
    {7, 10, 2392, "sets"},
    {8, 2, 35, "Del13"},
    {8, 3, 104, "sets"},
    {8, 4, 248, "sets"},
    {8, 5, 528, "sets"},
    {8, 6, 984, "lewis14"},
    {8, 7, 1712, "lewis14"},
    {8, 8, 2768, "lewis14"},
    {8, 9, 4280, "lewis14"},
    {8, 10, 6320, "lewis14"},
    {9, 2, 42, "Del13"},
    {9, 3, 130, "Mac10"},
    {9, 4, 320, "sets"},
    {9, 5, 700, "lewis14"},
    {9, 6, 1416, "lewis14"},
    {9, 7, 2548, "lewis14"},
    {9, 8, 4304, "lewis14"},
    {9, 9, 6804, "lewis14"},
    {9, 10, 10320, "lewis14"},
    {10, 2, 51, "Del13"},
    {10, 3, 177, "Mac10"},
    {10, 4, 457, "sets"},
    {10, 5, 1099, "lewis14b"},
    {10, 6, 1533, "sets"},
    {10, 7, 2925, "sets"},
    {10, 8, 5136, "sets"},
    {10, 9, 8560, "sets"},
    {10, 10, 13840, "sets"},
    {11, 2, 56, "Del13"},
    {11, 3, 210, "sets"},
    {11, 4, 576, "sets"},
    {11, 5, 1380, "sets"},
    {11, 6, 2100, "sets"},
    {11, 7, 4088, "sets"},
    {11, 8, 7736, "sets"},
    {11, 9, 13400, "sets"},
    {11, 10, 21976, "sets"},
    {12, 2, 67, "Del13"},
    {12, 3, 275, "sets"},
    {12, 4, 761, "sets"},
    {12, 5, 1800, "sets"},
    {12, 6, 3297, "sets"},
    {12, 7, 6864, "sets"},
    {12, 8, 13200, "sets"},
    {12, 9, 24600, "sets"},
    {12, 10, 42800, "sets"},
    {13, 2, 80, "sets"},
    {13, 3, 312, "sets"},
    {13, 4, 920, "sets"},
    {13, 5, 1828, "sets"},
    {13, 6, 4396, "sets"},
    {13, 7, 9100, "sets"},
    {13, 8, 18720, "sets"},
    {13, 9, 36036, "sets"},
    {13, 10, 63700, "sets"},
    {14, 2, 90, "sets"},
    {14, 3, 381, "sets"},
    {14, 4, 825, "sets"},
    {14, 5, 2285, "sets"},
    {14, 6, 5941, "sets"},
    {14, 7, 14287, "sets"},
    {14, 8, 29016, "sets"},
    {14, 9, 54120, "sets"},
    {14, 10, 113139, "sets"},
    {15, 2, 96, "sets"},
    {15, 3, 448, "sets"},
    {15, 4, 1100, "sets"},
    {15, 5, 2880, "sets"},
    {15, 6, 7488, "sets"},
    {15, 7, 17584, "sets"},
    {15, 8, 39564, "sets"},
    {15, 9, 81900, "sets"},
    {15, 10, 154720, "sets"},
    {16, 2, 112, "sets"},
    {16, 4, 936, "sets"},
    {16, 5, 3640, "sets"},
    {16, 6, 9597, "sets"},
    {16, 7, 25135, "sets"},
    {16, 8, 60445, "sets"},
    {16, 9, 128583, "sets"},
    {16, 10, 239816, "sets"},
};

// degree, diameter, order = order1 (degree1, diameter1) x order2 (degree2, diameter2)
constexpr PublishedProduct kPublishedProducts[] = {
    {10, 6, 1533, 2, 1, 3, 8, 5, 511},
    {10, 7, 2925, 4, 3, 25, 6, 4, 117},
    {10, 8, 5136, 2, 1, 3, 8, 7, 1712},
    {10, 9, 8560, 2, 2, 5, 8, 7, 1712},
    {10, 10, 13840, 2, 2, 5, 8, 8, 2768},
    {11, 6, 2100, 2, 1, 3, 9, 5, 700},
    {11, 7, 4088, 3, 2, 8, 8, 5, 511},
    {11, 8, 7736, 3, 2, 8, 8, 6, 967},
    {11, 9, 13400, 4, 3, 25, 7, 6, 536},
    {11, 10, 21976, 4, 4, 41, 7, 6, 536},
    {12, 6, 3297, 2, 1, 3, 10, 5, 1099},
    {12, 7, 6864, 4, 2, 13, 8, 5, 528},
    {12, 8, 13200, 4, 3, 25, 8, 5, 528},
    {12, 9, 24600, 4, 3, 25, 8, 6, 984},
    {12, 10, 42800, 4, 3, 25, 8, 7, 1712},
    {13, 5, 1828, 3, 1, 4, 10, 4, 457},
    {13, 6, 4396, 3, 1, 4, 10, 5, 1099},
    {13, 7, 9100, 4, 2, 13, 9, 5, 700},
    {13, 8, 18720, 6, 4, 117, 7, 4, 160},
    {13, 9, 36036, 6, 4, 117, 7, 5, 308},
    {13, 10, 63700, 4, 3, 25, 9, 7, 2548},
    {14, 4, 825, 2, 1, 3, 12, 3, 275},
    {14, 5, 2285, 4, 1, 5, 10, 4, 457},
    {14, 6, 5941, 4, 2, 13, 10, 4, 457},
    {14, 7, 14287, 4, 2, 13, 10, 5, 1099},
    {14, 8, 29016, 6, 4, 117, 8, 4, 248},
    {14, 9, 59787, 6, 4, 117, 8, 5, 511},
    {14, 10, 113139, 6, 4, 117, 8, 6, 967},
    {15, 4, 1100, 3, 1, 4, 12, 3, 275},
    {15, 5, 3044, 3, 1, 4, 12, 4, 761},
    {15, 6, 7524, 7, 3, 76, 8, 3, 99},
    {15, 7, 17940, 4, 2, 13, 11, 5, 1380},
    {15, 8, 39564, 5, 3, 36, 10, 5, 1099},
    {15, 9, 81900, 6, 4, 117, 9, 5, 700},
    {15, 10, 154720, 7, 4, 160, 8, 6, 967},
    {16, 5, 3805, 4, 1, 5, 12, 4, 761},
    {16, 6, 10296, 8, 3, 99, 8, 3, 104},
    {16, 7, 25135, 6, 3, 55, 10, 4, 457},
    {16, 8, 60445, 6, 3, 55, 10, 5, 1099},
    {16, 9, 128583, 6, 4, 117, 10, 5, 1099},
    {16, 10, 269808, 8, 5, 511, 8, 5, 528},
};

// The printed (10, 10) set has diameter 16. Its second factor must be
// {1, a, 1072, 1080} on Z_2768 with diameter 8, which holds only for
// a = 345, so the printed 1032 stands for 5 * 345 = 1725.
constexpr std::int64_t kRepaired13840[] = {5, 1725, 2768, 5360, 5400};

constexpr int kFamilyMaxDiameter = 12;
constexpr int kFamilyMaxDegree = 16;

RecordEntry Witness(const ConnectionSet& set, int diameter, std::string source, bool optimal) {
  RecordEntry e;
  e.degree = set.degree();
  e.diameter = diameter;
  e.order = set.order();
  e.set = set;
  e.source = std::move(source);
  e.optimal = optimal;
  return e;
}

// Splits `set` along every coprime factorisation of its order and adds both
// factors of each successful split.
void AddFactors(WitnessCatalog& catalog, const ConnectionSet& set) {
  const std::int64_t n = set.order();
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0 || std::gcd(f, n / f) != 1) continue;
    const auto parts = SplitProduct(set, f);
    if (!parts) continue;
    const std::string source = "factor of " + std::to_string(n);
    for (const ConnectionSet& part : {parts->first, parts->second}) {
      const auto d = Diameter(CirculantGraph(part));
      if (d) catalog.Add(Witness(part, static_cast<int>(*d), source, false));
    }
  }
}

WitnessCatalog BuildCatalog() {
  WitnessCatalog catalog;
  for (const PublishedSet& p : kPublishedSets) {
    catalog.Add(Witness(p.set(), p.diameter, "published", p.optimal));
  }
  const ConnectionSet repaired = ConnectionSet::Canonical(13840, kRepaired13840);
  catalog.Add(Witness(repaired, 10, "published, 1032 read as 1725", false));

  for (int degree = 2; degree <= kFamilyMaxDegree; ++degree) {
    for (int diameter = 1; diameter <= kFamilyMaxDiameter; ++diameter) {
      if (auto set = FamilyWitness(degree, diameter)) {
        catalog.Add(Witness(*set, diameter, "family", true));
      }
    }
  }

  for (const PublishedSet& p : kPublishedSets) AddFactors(catalog, p.set());
  AddFactors(catalog, repaired);

  for (const PublishedProduct& row : kPublishedProducts) {
    if (catalog.WithOrder(row.degree, row.diameter, row.order)) continue;
    const RecordEntry* a = catalog.WithOrder(row.degree1, row.diameter1, row.order1);
    const RecordEntry* b = catalog.WithOrder(row.degree2, row.diameter2, row.order2);
    if (!a || !b || std::gcd(row.order1, row.order2) != 1) continue;
    const ProductWitness w = CartesianProduct(CirculantGraph(*a->set), CirculantGraph(*b->set));
    catalog.Add(Witness(w.product.connection_set(), static_cast<int>(w.diameter),
                        "product " + std::to_string(row.order1) + " x " +
                            std::to_string(row.order2),
                        false));
  }
  return catalog;
}

}  // namespace

std::size_t PublishedSet::size() const {
  std::size_t n = 0;
  while (n < kMaxPublishedGenerators && generators[n] != 0) ++n;
  return n;
}

ConnectionSet PublishedSet::set() const {
  return ConnectionSet::Canonical(static_cast<std::int64_t>(order),
                                  std::span<const std::int64_t>(generators, size()));
}

std::span<const PublishedSet> PublishedSets() { return kPublishedSets; }
std::span<const PublishedOrder> PublishedOrders() { return kPublishedOrders; }
std::span<const PublishedProduct> PublishedProducts() { return kPublishedProducts; }

std::optional<ConnectionSet> FamilyWitness(int degree, int diameter) {
  if (degree < 2 || diameter < 1) return std::nullopt;
  if (diameter == 1) return Complete(degree + 1).connection_set();
  switch (degree) {
    case 2: return Cycle(2 * diameter + 1).connection_set();
    case 3: return ConnectionSet::Canonical(4 * diameter, {1, 2 * diameter});
    case 4: return OptimalDegree4Set(2 * diameter * diameter + 2 * diameter + 1);
    default: return std::nullopt;
  }
}

const WitnessCatalog& BuiltinCatalog() {
  static const WitnessCatalog catalog = BuildCatalog();
  return catalog;
}

RecordTable SeedBuiltin() {
  RecordTable table;
  auto known_optimal = [](int degree, int diameter) {
    // Degrees up to 8 in the published grid are all known optima.
    return degree <= 8 && diameter >= 2 && diameter <= 10;
  };
  for (const PublishedOrder& p : kPublishedOrders) {
    RecordEntry e;
    e.degree = p.degree;
    e.diameter = p.diameter;
    e.order = p.order;
    e.source = p.source.empty() ? "published" : "published:" + std::string(p.source);
    e.optimal = known_optimal(p.degree, p.diameter);
    table.Put(std::move(e));
  }
  for (const PublishedProduct& row : kPublishedProducts) {
    RecordEntry e;
    e.degree = row.degree;
    e.diameter = row.diameter;
    e.order = row.order;
    e.source = "published:product";
    table.Put(std::move(e));
  }

  const WitnessCatalog& catalog = BuiltinCatalog();
  for (int degree = 2; degree <= kFamilyMaxDegree; ++degree) {
    for (int diameter = 1; diameter <= kFamilyMaxDiameter; ++diameter) {
      const RecordEntry* best = catalog.Largest(degree, diameter);
      if (!best) continue;
      const RecordEntry* current = table.Find(degree, diameter);
      if (current && current->order > best->order) continue;
      RecordEntry e = *best;
      e.optimal = e.optimal || known_optimal(degree, diameter) ||
                  (current && current->order == e.order && current->optimal);
      table.Assign(std::move(e));
    }
  }
  return table;
}

}  // namespace circdd
