#include "grundy/chocolate.hpp"

#include <algorithm>
#include <bit>

namespace grundy {

HFunction HFunction::floor_div(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("floor-div needs k >= 1");
  return HFunction(Kind::FloorDiv, k, {}, "floor-div:" + std::to_string(k));
}

HFunction HFunction::log_step() {
  return HFunction(Kind::LogStep, 0, {}, "log-step");
}

HFunction HFunction::finite_table(std::vector<std::uint32_t> values) {
  if (values.empty()) throw std::invalid_argument("empty h table");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1])
      throw std::invalid_argument("h table not monotone at z=" +
                                  std::to_string(i));
  std::string name = "table:";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) name += ';';
    name += std::to_string(values[i]);
  }
  return HFunction(Kind::Table, 0, std::move(values), std::move(name));
}

std::uint32_t HFunction::operator()(std::uint32_t z) const {
  switch (kind_) {
    case Kind::FloorDiv:
      return z / (2 * k_);
    case Kind::LogStep:
      return z == 0 ? 0 : std::bit_floor(z) - 1;
    case Kind::Table:
      return z < table_.size() ? table_[z] : table_.back();
  }
  return 0;
}

std::optional<std::uint32_t> HFunction::domain_max() const {
  if (kind_ != Kind::Table) return std::nullopt;
  return static_cast<std::uint32_t>(table_.size() - 1);
}

const std::vector<HFunction>& HFunction::builtins() {
  static const std::vector<HFunction> all = {
      HFunction::floor_div(1), HFunction::floor_div(2), HFunction::log_step()};
  return all;
}

FFunction FFunction::from_h(HFunction h) {
  std::string name = "h(" + h.name() + ")";
  return FFunction(Kind::FromH, 0, std::move(h), {}, std::move(name));
}

FFunction FFunction::sum_floor_div(std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("sum-div needs d >= 1");
  return FFunction(Kind::SumFloorDiv, d, std::nullopt, {},
                   "sum-div:" + std::to_string(d));
}

FFunction FFunction::finite_table(std::vector<std::vector<std::uint32_t>> rows) {
  if (rows.empty() || rows[0].empty())
    throw std::invalid_argument("empty F table");
  const std::size_t cols = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != cols) throw std::invalid_argument("ragged F table");
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (std::size_t z = 0; z < cols; ++z) {
      if (x > 0 && rows[x][z] < rows[x - 1][z])
        throw std::invalid_argument("F table not monotone in x at (" +
                                    std::to_string(x) + "," +
                                    std::to_string(z) + ")");
      if (z > 0 && rows[x][z] < rows[x][z - 1])
        throw std::invalid_argument("F table not monotone in z at (" +
                                    std::to_string(x) + "," +
                                    std::to_string(z) + ")");
    }
  std::string name = "ftable:";
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (x) name += '|';
    for (std::size_t z = 0; z < cols; ++z) {
      if (z) name += ';';
      name += std::to_string(rows[x][z]);
    }
  }
  return FFunction(Kind::Table, 0, std::nullopt, std::move(rows),
                   std::move(name));
}

std::uint32_t FFunction::operator()(std::uint32_t x, std::uint32_t z) const {
  switch (kind_) {
    case Kind::FromH:
      return (*h_)(z);
    case Kind::SumFloorDiv:
      return (static_cast<std::uint64_t>(x) + z) / d_;
    case Kind::Table: {
      const std::size_t r = std::min<std::size_t>(x, rows_.size() - 1);
      const std::size_t c = std::min<std::size_t>(z, rows_[0].size() - 1);
      return rows_[r][c];
    }
  }
  return 0;
}

std::optional<std::uint32_t> FFunction::domain_max_x() const {
  if (kind_ != Kind::Table) return std::nullopt;
  return static_cast<std::uint32_t>(rows_.size() - 1);
}

std::optional<std::uint32_t> FFunction::domain_max_z() const {
  if (kind_ != Kind::Table) return std::nullopt;
  return static_cast<std::uint32_t>(rows_[0].size() - 1);
}

std::string NsWitness::describe() const {
  std::string where;
  if (slice == Slice::FixedX)
    where = " in slice z->F(" + std::to_string(slice_index) + ",z)";
  else if (slice == Slice::FixedZ)
    where = " in slice x->F(x," + std::to_string(slice_index) + ")";
  if (clause == NsClause::OriginNonzero)
    return "value at 0 is nonzero" + where;
  return "quotient mismatch at (" + std::to_string(a) + "," +
         std::to_string(b) + ") with i=" + std::to_string(i) + where;
}

namespace {

// Adjacent pairs inside each floor(z/2^i) block suffice: equality of the
// halved quotients is transitive along the block.
std::optional<NsWitness> check_slice(
    const std::function<std::uint32_t(std::uint32_t)>& f, std::uint32_t max,
    std::uint32_t i_max, bool require_origin_zero) {
  if (require_origin_zero && f(0) != 0) {
    NsWitness w;
    w.clause = NsClause::OriginNonzero;
    return w;
  }
  std::vector<std::uint32_t> vals(max + 1);
  for (std::uint32_t z = 0; z <= max; ++z) vals[z] = f(z);
  for (std::uint32_t i = 1; i <= i_max; ++i) {
    for (std::uint32_t z = 1; z <= max; ++z) {
      if ((z >> i) != ((z - 1) >> i)) continue;
      if ((vals[z] >> (i - 1)) != (vals[z - 1] >> (i - 1))) {
        NsWitness w;
        w.clause = NsClause::QuotientMismatch;
        w.a = z - 1;
        w.b = z;
        w.i = i;
        return w;
      }
    }
  }
  return std::nullopt;
}

void note_if_not_surjective(const HFunction& h, std::uint32_t z_max,
                            NsResult& r) {
  if (h.kind() != HFunction::Kind::Table) return;
  const std::uint32_t top = h(z_max);
  std::vector<bool> hit(top + 1, false);
  for (std::uint32_t z = 0; z <= z_max; ++z) hit[h(z)] = true;
  for (std::uint32_t v = 0; v <= top; ++v)
    if (!hit[v]) {
      r.notes.push_back("table skips value " + std::to_string(v) +
                        " on [0," + std::to_string(z_max) + "]");
      return;
    }
}

}  // namespace

NsResult ns_check_h(const HFunction& h, std::uint32_t z_max,
                    std::uint32_t i_max) {
  if (z_max == 0 || i_max == 0)
    throw std::invalid_argument("ns_check_h needs positive bounds");
  if (auto dom = h.domain_max(); dom && *dom < z_max)
    throw std::invalid_argument("h table covers z <= " + std::to_string(*dom) +
                                ", cannot vouch up to z_max=" +
                                std::to_string(z_max));
  NsResult r;
  r.witness = check_slice([&](std::uint32_t z) { return h(z); }, z_max, i_max,
                          /*require_origin_zero=*/true);
  r.pass = !r.witness.has_value();
  note_if_not_surjective(h, z_max, r);
  return r;
}

NsResult ns_check_f(const FFunction& f, std::uint32_t x_max,
                    std::uint32_t z_max, std::uint32_t i_max) {
  if (x_max == 0 || z_max == 0 || i_max == 0)
    throw std::invalid_argument("ns_check_f needs positive bounds");
  if (auto dom = f.domain_max_x(); dom && *dom < x_max)
    throw std::invalid_argument("F table covers x <= " + std::to_string(*dom) +
                                ", cannot vouch up to x_max=" +
                                std::to_string(x_max));
  if (auto dom = f.domain_max_z(); dom && *dom < z_max)
    throw std::invalid_argument("F table covers z <= " + std::to_string(*dom) +
                                ", cannot vouch up to z_max=" +
                                std::to_string(z_max));
  NsResult r;
  for (std::uint32_t n = 0; n <= x_max; ++n) {
    auto w = check_slice([&](std::uint32_t z) { return f(n, z); }, z_max,
                         i_max, /*require_origin_zero=*/true);
    if (w) {
      w->slice = NsWitness::Slice::FixedX;
      w->slice_index = n;
      r.witness = w;
      r.pass = false;
      return r;
    }
  }
  for (std::uint32_t m = 0; m <= z_max; ++m) {
    auto w = check_slice([&](std::uint32_t x) { return f(x, m); }, x_max,
                         i_max, /*require_origin_zero=*/false);
    if (w) {
      w->slice = NsWitness::Slice::FixedZ;
      w->slice_index = m;
      r.witness = w;
      r.pass = false;
      return r;
    }
    if (f(0, m) != 0)
      r.notes.push_back("slice x->F(x," + std::to_string(m) +
                        ") starts at " + std::to_string(f(0, m)));
  }
  r.pass = true;
  return r;
}

Choco2Ruleset::Choco2Ruleset(HFunction h)
    : Ruleset("cb2[" + h.name() + "]", 2), h_(std::move(h)) {}

void Choco2Ruleset::append_options(const PositionKey& g,
                                   std::vector<PositionKey>& out) const {
  const std::uint32_t y = g.payload[0], z = g.payload[1];
  for (std::uint32_t v = 0; v < y; ++v) out.push_back(raw_key({v, z}));
  for (std::uint32_t w = 0; w < z; ++w)
    out.push_back(raw_key({std::min(y, h_(w)), w}));
}

PositionKey Choco2Ruleset::position(std::uint32_t y, std::uint32_t z) const {
  if (y > h_(z))
    throw std::invalid_argument(
        "cb2 invariant y <= h(z) violated: y=" + std::to_string(y) + ", h(" +
        std::to_string(z) + ")=" + std::to_string(h_(z)));
  return raw_key({y, z});
}

Choco3Ruleset::Choco3Ruleset(FFunction f)
    : Ruleset("cb3[" + f.name() + "]", 3), f_(std::move(f)) {}

void Choco3Ruleset::append_options(const PositionKey& g,
                                   std::vector<PositionKey>& out) const {
  const std::uint32_t x = g.payload[0], y = g.payload[1], z = g.payload[2];
  for (std::uint32_t u = 0; u < x; ++u)
    out.push_back(raw_key({u, std::min(f_(u, z), y), z}));
  for (std::uint32_t v = 0; v < y; ++v) out.push_back(raw_key({x, v, z}));
  for (std::uint32_t w = 0; w < z; ++w)
    out.push_back(raw_key({x, std::min(y, f_(x, w)), w}));
}

PositionKey Choco3Ruleset::position(std::uint32_t x, std::uint32_t y,
                                    std::uint32_t z) const {
  if (y > f_(x, z))
    throw std::invalid_argument(
        "cb3 invariant y <= F(x,z) violated: y=" + std::to_string(y) + ", F(" +
        std::to_string(x) + "," + std::to_string(z) +
        ")=" + std::to_string(f_(x, z)));
  return raw_key({x, y, z});
}

std::vector<std::array<std::uint32_t, 3>> move_f(const FFunction& f,
                                                 std::uint32_t x,
                                                 std::uint32_t y,
                                                 std::uint32_t z) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t u = 0; u < x; ++u)
    out.push_back({u, std::min(f(u, z), y), z});
  for (std::uint32_t v = 0; v < y; ++v) out.push_back({x, v, z});
  for (std::uint32_t w = 0; w < z; ++w)
    out.push_back({x, std::min(y, f(x, w)), w});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint32_t choco2_sg(const HFunction& h, std::uint32_t y, std::uint32_t z,
                        SGCache& cache, const Budget& budget) {
  Choco2Ruleset rules(h);
  return sg(rules, rules.position(y, z), cache, budget);
}

std::uint32_t choco3_sg(const FFunction& f, std::uint32_t x, std::uint32_t y,
                        std::uint32_t z, SGCache& cache, const Budget& budget) {
  Choco3Ruleset rules(f);
  return sg(rules, rules.position(x, y, z), cache, budget);
}

bool h_bound(const HFunction& h, std::uint32_t z) {
  if (z == 0) throw std::invalid_argument("h_bound needs z >= 1");
  return h(z) <= std::bit_floor(z) - 1;
}

bool xor_at_least_16(const HFunction& h, std::uint32_t z) {
  if (z < 16) throw std::invalid_argument("xor_at_least_16 needs z >= 16");
  const std::uint32_t top = h(z);
  for (std::uint32_t y = 0; y <= top; ++y)
    if ((y ^ z) < 16) return false;
  return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> small_sg_classify(
    std::uint32_t v) {
  using P = std::pair<std::uint32_t, std::uint32_t>;
  switch (v) {
    case 0: return {P{0, 0}};
    case 1: return {P{0, 1}};
    case 2: return {P{0, 2}, P{1, 3}};
    case 3: return {P{0, 3}, P{1, 2}};
    case 4: return {P{0, 4}, P{1, 5}, P{2, 6}, P{3, 7}};
    case 5: return {P{0, 5}, P{1, 4}, P{2, 7}, P{3, 6}};
    case 6: return {P{0, 6}, P{1, 7}, P{2, 4}, P{3, 5}};
    case 7: return {P{0, 7}, P{1, 6}, P{2, 5}, P{3, 4}};
    case 8:
      return {P{0, 8},  P{1, 9},  P{2, 10}, P{3, 11},
              P{4, 12}, P{5, 13}, P{6, 14}, P{7, 15}};
    default:
      throw std::invalid_argument("small_sg_classify supports v <= 8, got " +
                                  std::to_string(v));
  }
}

}  // namespace grundy
