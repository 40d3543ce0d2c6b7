// Walks through the main entry points on a few small graphs.
#include <cstdio>
#include <string>

#include "gdspread/gdspread.hpp"

using namespace gdspread;

static void show(const std::string &label, const Graph &g, double alpha) {
  BoundContext ctx(g, alpha);
  std::printf("%s  n=%d  W=%lld  alpha=%.2f  spread=%.6f\n", label.c_str(), ctx.n(),
              static_cast<long long>(ctx.profile().wiener), alpha, ctx.spread());
  const auto eval = evaluate_all(ctx);
  for (const auto &r : eval.reports) {
    if (!r.applicable)
      continue;
    std::printf("  %-26s %-5s %10.6f%s\n", r.bound_id.c_str(), to_string(r.direction), r.bound,
                r.equality ? "  (tight)" : (r.holds ? "" : "  VIOLATED"));
  }
}

int main() {
  show("P3", parse_graph6("Bg"), 0.0);
  show("K_{2,3}", complete_bipartite(2, 3), 0.5);
  show("CS_{2,3}", complete_split(2, 5), 0.25);
  show("C6", cycle_graph(6), 0.75);

  std::printf("\nspread of K_{a,10-a} at alpha=0.5:\n");
  for (int a = 1; a <= 5; ++a) {
    const auto s = spread_complete_bipartite(a, 10, 0.5);
    std::printf("  a=%d  numeric=%.6f  closed form=%.6f (%s)\n", a, s.numeric, s.formula, to_string(s.status));
  }
  return 0;
}
