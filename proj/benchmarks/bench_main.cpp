#include <benchmark/benchmark.h>

#include "compsem/heim.hpp"
#include "compsem/model.hpp"

#include <random>

namespace {

using namespace compsem;

const Lexicon& lex() {
  static const Lexicon lx = Lexicon::builtin();
  return lx;
}

const SemLexicon& sem() {
  static const SemLexicon s = SemLexicon::standard();
  return s;
}

SurfaceTree wra_tree() {
  for (const SurfaceTree& t : parse("George owns a faster car than Bill", lex()))
    if (classify_construction(t) == ConstructionTag::Wra) return t;
  throw std::logic_error("missing analysis");
}

Model car_model(int cars_per_owner) {
  Model m;
  m.entities = {"george", "bill"};
  m.constants = {{"g*", "george"}, {"b*", "bill"}};
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> speed(1, 400);
  for (const char* owner : {"george", "bill"})
    for (int i = 0; i < cars_per_owner; ++i) {
      std::string id = std::string(owner) + std::to_string(i);
      m.entities.push_back(id);
      m.sorts["car'"].insert(id);
      m.relations["own'"].insert({owner, id});
      m.measures["speed"][id] = speed(rng);
    }
  return m;
}

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    auto trees = parse("George owns a faster car than Bill or Richard", lex());
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(BM_Parse);

void BM_BuildLf(benchmark::State& state) {
  SurfaceTree t = wra_tree();
  for (auto _ : state) {
    LfTree lf = build_lf(t);
    benchmark::DoNotOptimize(lf);
  }
}
BENCHMARK(BM_BuildLf);

void BM_ComposeWra(benchmark::State& state) {
  SurfaceTree t = wra_tree();
  for (auto _ : state) {
    auto readings = compose_all(t, sem());
    benchmark::DoNotOptimize(readings);
  }
}
BENCHMARK(BM_ComposeWra);

void BM_NormalizeChain(benchmark::State& state) {
  LexEntry fast;
  fast.sem_key = "fast'";
  fast.attributive = true;
  Term adj = sem().adjective(fast);
  Term d = Term::var("d", SemType::d());
  Term q = Term::var("Q", SemType::arrow(SemType::e(), SemType::t()));
  Term x = Term::var("x", SemType::e());
  Term expansion = Term::lam(q, Term::lam(x,
      Term::app(sem().er, Term::lam(d, Term::app(Term::app(Term::app(adj, d), q), x)))));
  for (auto _ : state) {
    Term n = normalize(expansion);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_NormalizeChain);

void BM_Evaluate(benchmark::State& state) {
  SurfaceTree t = wra_tree();
  Reading r = compose_all(t, sem())[0];
  Model m = car_model(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    bool v = evaluate(r.form, m);
    benchmark::DoNotOptimize(v);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Evaluate)->RangeMultiplier(2)->Range(2, 16)->Complexity();

}  // namespace

BENCHMARK_MAIN();
