#include "opalg/core/check.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "opalg/core/errors.hpp"

namespace opalg {

const CheckReport* CheckReport::find(std::string_view name) const
{
  if (identity == name)
    return this;
  for (const auto& sub : subchecks)
    if (const CheckReport* hit = sub.find(name))
      return hit;
  return nullptr;
}

const CheckReport& CheckReport::at(std::string_view name) const
{
  if (const CheckReport* hit = find(name))
    return *hit;
  throw std::out_of_range("no sub-check named '" + std::string(name) + "' in '" + identity + "'");
}

CheckReport aggregate(std::string identity, std::vector<CheckReport> subchecks)
{
  CheckReport report;
  report.identity = std::move(identity);
  for (const auto& sub : subchecks) {
    report.tuples_evaluated += sub.tuples_evaluated;
    if (!sub.informational && !sub.passed && report.passed) {
      report.passed = false;
      report.witness = sub.witness;
    }
  }
  // A failing sub-report without a witness (skipped prerequisite) still fails.
  if (!report.passed && !report.witness)
    report.witness = Witness{};
  report.subchecks = std::move(subchecks);
  return report;
}

CheckReport informational(CheckReport report)
{
  report.informational = true;
  return report;
}

CheckReport skipped(std::string identity, std::string_view reason)
{
  CheckReport report;
  report.identity = std::move(identity);
  report.passed = false;
  report.witness = Witness{};
  report.markers.push_back("skipped: " + std::string(reason));
  return report;
}

void enforce_guard(std::size_t dim, std::size_t arity, const CheckOptions& opts)
{
  if (opts.force)
    return;
  if ((arity >= 5 && dim > 8) || (arity == 4 && dim > 12))
    throw GuardExceeded("refusing a " + std::to_string(arity) + "-variable sweep at dimension " +
                        std::to_string(dim) + " without the force flag");
}

namespace {

std::uint64_t tuple_count(std::size_t dim, std::size_t arity)
{
  std::uint64_t n = 1;
  for (std::size_t a = 0; a < arity; ++a)
    n *= dim;
  return n;
}

void unflatten(std::size_t dim, std::uint64_t flat, std::vector<std::size_t>& tuple)
{
  for (std::size_t a = tuple.size(); a-- > 0;) {
    tuple[a] = static_cast<std::size_t>(flat % dim);
    flat /= dim;
  }
}

} // namespace

CheckReport check_identity(std::string identity, std::size_t dim, std::size_t arity,
                           const Residual& residual, const CheckOptions& opts)
{
  enforce_guard(dim, arity, opts);
  const std::uint64_t total = dim == 0 ? 0 : tuple_count(dim, arity);

  // Smallest failing flat index seen so far; `total` means none.
  std::atomic<std::uint64_t> first_failure{total};
  std::mutex witness_mutex;
  std::optional<Witness> witness;

  const auto record = [&](std::uint64_t flat, const std::vector<std::size_t>& tuple, Vector r) {
    std::lock_guard lock(witness_mutex);
    if (flat < first_failure.load()) {
      first_failure.store(flat);
      witness = Witness{tuple, std::move(r)};
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kChunk = 64;
  if (total < 4 * kChunk)
    threads = 1;

  std::atomic<std::uint64_t> next_chunk{0};
  const auto worker = [&] {
    std::vector<std::size_t> tuple(arity);
    for (;;) {
      const std::uint64_t begin = next_chunk.fetch_add(kChunk);
      if (begin >= total || begin >= first_failure.load())
        return;
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t flat = begin; flat < end; ++flat) {
        if (flat >= first_failure.load())
          return;
        unflatten(dim, flat, tuple);
        Vector r = residual(tuple);
        if (!r.is_zero()) {
          record(flat, tuple, std::move(r));
          break;
        }
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }

  CheckReport report;
  report.identity = std::move(identity);
  const std::uint64_t fail = first_failure.load();
  report.passed = fail == total;
  report.tuples_evaluated = report.passed ? total : fail + 1;
  report.witness = std::move(witness);
  return report;
}

CheckReport check_operators_equal(std::string identity, const Operator& a, const Operator& b)
{
  require_same_dim(a.dim(), b.dim(), "operator comparison");
  return check_identity(std::move(identity), a.dim(), 1,
                        [&](std::span<const std::size_t> t) { return a.column(t[0]) - b.column(t[0]); });
}

CheckReport check_structures_equal(std::string identity, const BilinearStructure& a,
                                   const BilinearStructure& b)
{
  require_same_dim(a.dim(), b.dim(), "structure comparison");
  return check_identity(std::move(identity), a.dim(), 2, [&](std::span<const std::size_t> t) {
    return a.product({t[0], t[1]}) - b.product({t[0], t[1]});
  });
}

CheckReport check_structures_equal(std::string identity, const TrilinearStructure& a,
                                   const TrilinearStructure& b)
{
  require_same_dim(a.dim(), b.dim(), "structure comparison");
  return check_identity(std::move(identity), a.dim(), 3, [&](std::span<const std::size_t> t) {
    return a.product({t[0], t[1], t[2]}) - b.product({t[0], t[1], t[2]});
  });
}

std::string_view to_string(JtsVariant v)
{
  return v == JtsVariant::middle ? "middle" : "jacobson";
}

JtsVariant parse_jts_variant(std::string_view text)
{
  if (text == "middle")
    return JtsVariant::middle;
  if (text == "jacobson")
    return JtsVariant::jacobson;
  throw ParseError("unknown JTS variant '" + std::string(text) + "'");
}

CheckReport check_antisymmetry(const BilinearStructure& b, const CheckOptions& opts)
{
  return check_identity("antisymmetry", b.dim(), 2,
                        [&](std::span<const std::size_t> t) {
                          return b.product({t[0], t[1]}) + b.product({t[1], t[0]});
                        },
                        opts);
}

CheckReport check_jacobi(const BilinearStructure& b, const CheckOptions& opts)
{
  const std::size_t n = b.dim();
  return check_identity("jacobi", n, 3,
                        [&](std::span<const std::size_t> t) {
                          const Vector x = Vector::basis(n, t[0]);
                          const Vector y = Vector::basis(n, t[1]);
                          const Vector z = Vector::basis(n, t[2]);
                          return b(b(x, y), z) + b(b(y, z), x) + b(b(z, x), y);
                        },
                        opts);
}

CheckReport check_lie(const BilinearStructure& b, const CheckOptions& opts)
{
  return aggregate("lie", {check_antisymmetry(b, opts), check_jacobi(b, opts)});
}

CheckReport check_jts_identity(const TrilinearStructure& t, JtsVariant variant,
                               const CheckOptions& opts)
{
  const std::size_t n = t.dim();
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i)
    e.push_back(Vector::basis(n, i));

  if (variant == JtsVariant::middle) {
    return check_identity("jts-identity[middle]", n, 5,
                          [&](std::span<const std::size_t> i) {
                            const Vector &x = e[i[0]], &a = e[i[1]], &z = e[i[2]], &b = e[i[3]],
                                         &y = e[i[4]];
                            return t(x, t(a, z, b), y) - t(t(x, a, y), b, z) -
                                   t(t(y, a, z), b, x) + t(t(x, b, y), a, z);
                          },
                          opts);
  }
  return check_identity("jts-identity[jacobson]", n, 5,
                        [&](std::span<const std::size_t> i) {
                          const Vector &a = e[i[0]], &b = e[i[1]], &x = e[i[2]], &y = e[i[3]],
                                       &z = e[i[4]];
                          return t(a, b, t(x, y, z)) - t(t(a, b, x), y, z) +
                                 t(x, t(b, a, y), z) - t(x, y, t(a, b, z));
                        },
                        opts);
}

} // namespace opalg
