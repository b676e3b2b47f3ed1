#!/usr/bin/env python3
"""Regenerates data/sample_corpus.jsonl.

Synthetic information-retrieval abstracts with a two-level phrase inventory:
a small set of hub words participates in many multiword phrases, so the
containment network built from the corpus has a few high-out-degree word
nodes and many low-degree ones. Deterministic for a fixed seed.
"""

import argparse
import json
import random

HUBS = [
    "search", "network", "model", "graph", "term", "query", "data", "index",
    "retrieval", "language", "feature", "ranking", "cluster", "topic",
    "vector", "document", "user", "web", "learning", "analysis",
    "information", "knowledge",
]

MIDS = [
    "semantic", "neural", "deep", "statistical", "probabilistic", "latent",
    "relevance", "precision", "recall", "evaluation", "corpus", "collection",
    "frequency", "weight", "score", "similarity", "distance", "measure",
    "visibility", "horizontal", "series", "sequence", "node", "edge",
    "degree", "distribution", "power", "law", "scale", "free", "random",
    "walk", "community", "centrality", "embedding", "representation",
    "attention", "classifier", "regression", "inference", "bayesian",
    "markov", "chain", "hidden", "state", "entropy", "divergence",
    "gradient", "descent", "optimization", "loss", "objective", "kernel",
    "margin", "support", "machine", "decision", "tree", "forest",
    "ensemble", "boosting", "sampling", "estimation", "parameter",
    "validation", "training", "label", "supervised", "unsupervised",
    "reinforcement", "agent", "reward", "policy", "value", "action",
    "strategy", "heuristic", "algorithm", "complexity", "runtime",
    "memory", "storage", "compression", "encoding", "hash", "table",
    "cache", "partition", "pipeline", "stream", "batch", "online",
    "incremental", "dynamic", "temporal", "spatial", "context", "window",
    "span", "phrase", "token", "word", "character", "syntax", "grammar",
    "dependency", "tag", "entity", "relation", "event", "sentiment",
    "opinion", "review", "rating", "recommendation", "collaborative",
    "filtering", "content", "profile", "session", "click", "log",
    "behavior", "interaction", "interface", "visualization", "layout",
    "spiral", "projection", "dimension", "reduction", "manifold", "factor",
    "matrix", "tensor", "decomposition", "spectral", "expansion",
    "suggestion", "intent", "snippet", "summary", "crawler", "page",
    "link", "anchor", "domain", "schema", "ontology", "taxonomy",
]

FILLERS = [
    "paper", "study", "approach", "method", "technique", "framework",
    "system", "experiment", "result", "finding", "improvement", "baseline",
    "benchmark", "dataset", "metric", "performance", "accuracy",
    "robustness", "efficiency", "effectiveness", "scalability",
    "limitation", "challenge", "problem", "solution", "task", "setting",
    "application", "field", "area", "literature", "work", "research",
    "direction", "insight", "observation", "assumption", "hypothesis",
    "theory", "practice", "design", "architecture", "component", "module",
    "layer", "unit", "block", "stage", "phase", "step", "procedure",
    "process", "operation", "transformation", "mapping", "alignment",
    "comparison", "contrast", "variation", "variant", "alternative",
    "extension", "generalization", "specialization", "instance", "example",
    "case", "scenario", "condition", "constraint", "requirement",
    "property", "characteristic", "attribute", "aspect", "dimension",
    "granularity", "resolution", "quality", "quantity", "volume",
    "velocity", "diversity", "coverage", "density", "sparsity", "noise",
    "signal", "pattern", "trend", "regularity", "anomaly", "outlier",
    "artifact", "evidence", "support", "confidence", "uncertainty",
    "variance", "bias", "error", "deviation", "residual", "margin",
    "threshold", "cutoff", "bound", "limit", "range", "interval",
    "segment", "portion", "fraction", "proportion", "ratio", "rate",
    "growth", "decay", "convergence", "stability", "sensitivity",
    "specificity", "tradeoff", "balance", "cost", "benefit", "gain",
    "overhead", "latency", "throughput", "bandwidth", "capacity", "load",
    "demand", "supply", "resource", "budget", "allocation", "schedule",
    "priority", "order", "hierarchy", "level", "tier", "depth", "width",
    "height", "size", "length", "duration", "period", "cycle", "epoch",
    "iteration", "round", "trial", "repetition", "replication",
    "simulation", "emulation", "abstraction", "formalism", "notation",
    "definition", "formulation", "derivation", "proof", "lemma",
    "theorem", "corollary", "axiom", "principle", "rule", "criterion",
    "guideline", "protocol", "standard", "convention", "format",
    "specification", "implementation", "deployment", "integration",
    "configuration", "calibration", "initialization", "termination",
    "interpolation", "extrapolation", "approximation", "normalization",
    "regularization", "augmentation", "annotation", "curation",
    "acquisition", "ingestion", "extraction", "selection", "pruning",
    "merging", "splitting", "grouping", "ordering", "sorting", "matching",
    "retrieving", "indexing", "scoring", "weighting", "caching",
    "sharding", "replica", "backup", "recovery", "failure", "fault",
    "defect", "bug", "patch", "release", "version", "revision", "draft",
]

VERBS = [
    "propose", "present", "introduce", "describe", "develop", "study",
    "investigate", "examine", "explore", "consider", "analyze", "compare",
    "evaluate", "demonstrate", "show", "report", "observe", "find",
    "derive", "prove", "establish", "validate", "confirm", "extend",
    "improve", "outperform", "exceed", "reduce", "increase", "capture",
    "exploit", "leverage", "combine", "integrate", "apply", "adapt",
]


POOL = HUBS + MIDS + FILLERS


def build_phrases(rng):
    """Returns (phrases, popularity weights). Each phrase is a word tuple.

    Phrase membership per word follows a truncated Zipf profile: the first
    words of the pool sit in dozens of phrases, the bulk in exactly one, so
    containment out-degrees inherit a power-law-like decay.
    """
    words = POOL
    membership = {word: max(1, round(8.0 / (rank + 1) ** 0.6))
                  for rank, word in enumerate(words)}
    slots = []
    for word, count in membership.items():
        slots.extend([word] * count)
    rng.shuffle(slots)

    def pop_word(exclude):
        for _ in range(len(slots)):
            word = slots.pop()
            if word not in exclude:
                return word
            slots.insert(0, word)
        return None

    seen = set()
    bigrams = []
    attempts = 0
    while len(bigrams) < 170 and attempts < 5000 and len(slots) >= 2:
        attempts += 1
        first = pop_word(())
        second = pop_word((first,))
        if first is None or second is None:
            break
        phrase = (first, second)
        if phrase in seen:
            slots.insert(0, second)
            continue
        seen.add(phrase)
        bigrams.append(phrase)
    trigrams = []
    for base in rng.sample(bigrams, 95):
        extra = pop_word(set(base))
        if extra is None:
            break
        longer = (extra,) + base if rng.random() < 0.75 else base + (extra,)
        if longer in seen:
            slots.insert(0, extra)
            continue
        seen.add(longer)
        trigrams.append(longer)
    # popular phrases are the hub-built ones, so even a small top-N selection
    # shares words across phrases
    phrases = bigrams + trigrams
    phrases.sort(key=lambda p: sum(membership[w] for w in p) + 2.0 * rng.random(),
                 reverse=True)
    weights = [1.0 / (rank + 1.0) ** 0.5 for rank in range(len(phrases))]
    return phrases, weights


_ZIPF_CACHE = {}


def zipf_choice(rng, items, exponent):
    key = (id(items), exponent)
    weights = _ZIPF_CACHE.get(key)
    if weights is None:
        weights = [1.0 / (rank + 1.0) ** exponent for rank in range(len(items))]
        _ZIPF_CACHE[key] = weights
    return rng.choices(items, weights=weights, k=1)[0]


def sentence(rng, phrases, phrase_weights):
    def P():
        return list(rng.choices(phrases, weights=phrase_weights, k=1)[0])

    def F():
        # noun slots reuse the phrase pool half the time, so phrase hubs are
        # frequent standalone words as well
        if rng.random() < 0.5:
            return [zipf_choice(rng, POOL, 0.9)]
        return [zipf_choice(rng, FILLERS, 0.8)]

    def V():
        return [rng.choice(VERBS)]

    # every content token is bracketed by stop words, so multiword windows
    # free of stop words arise only inside inventory phrases
    patterns = [
        lambda: ["we"] + V() + ["a"] + P() + ["for", "the"] + P() + ["in", "a"] + F(),
        lambda: ["the"] + P() + ["is", "more"] + F() + ["than", "the"] + P() + ["under", "a"] + F(),
        lambda: ["in", "our"] + F() + ["on", "a", "few"] + F() + ["we"] + V() + ["that", "the"] + P() + ["can", "be", "as"] + F() + ["as", "the"] + P(),
        lambda: ["we"] + V() + ["the"] + P() + ["with", "the"] + F() + ["of", "a"] + F() + ["and", "a"] + F(),
        lambda: ["a"] + P() + ["can"] + V() + ["the"] + F() + ["of", "the"] + P() + ["over", "a"] + F(),
        lambda: ["it", "is", "the"] + F() + ["of", "the"] + P() + ["that", "can"] + V() + ["the"] + F() + ["of", "the"] + P(),
        lambda: ["this"] + F() + ["of", "the"] + P() + ["in", "a"] + F() + ["is", "not", "the", "same", "as", "the"] + F() + ["of", "the"] + P(),
        lambda: ["the"] + P() + ["does", "not"] + V() + ["the"] + F() + ["of", "the"] + P() + ["at", "any"] + F(),
        lambda: ["we", "also"] + V() + ["a"] + F() + ["for", "the"] + P() + ["with", "no", "more", "than", "a", "few"] + F(),
        lambda: ["our"] + F() + ["on", "the"] + P() + ["and", "the"] + P() + ["is", "a"] + F(),
        lambda: ["an"] + F() + ["over", "the"] + F() + ["of", "each"] + P() + ["can"] + V() + ["a"] + F() + ["for", "the"] + P(),
        lambda: ["there", "is", "a"] + F() + ["between", "the"] + F() + ["of", "a"] + P() + ["and", "the"] + F() + ["of", "its"] + P(),
    ]
    words = rng.choice(patterns)()
    text = " ".join(words)
    return text[0].upper() + text[1:] + "."


def make_document(rng, doc_id, phrases, phrase_weights, target_tokens):
    sentences = []
    count = 0
    while count < target_tokens:
        s = sentence(rng, phrases, phrase_weights)
        sentences.append(s)
        count += len(s.split())
    return {"id": doc_id, "text": " ".join(sentences)}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=550)
    parser.add_argument("--seed", type=int, default=20260825)
    parser.add_argument("--out", default="data/sample_corpus.jsonl")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    phrases, phrase_weights = build_phrases(rng)
    with open(args.out, "w", encoding="ascii") as out:
        total = 0
        for i in range(args.docs):
            target = rng.randint(150, 230)
            doc = make_document(rng, f"a{i + 1:04d}", phrases, phrase_weights, target)
            total += len(doc["text"].split())
            out.write(json.dumps(doc) + "\n")
    print(f"{args.docs} documents, {total} whitespace tokens, "
          f"{len(phrases)} phrases -> {args.out}")


if __name__ == "__main__":
    main()
