// immanant: compute second immanantal polynomials, emit and reconstruct
// edge decks, run identity suites, and time the kernels.
//
// Exit codes: 0 ok, 1 failed identity, 2 usage/input error,
// 3 underdetermined, 4 inconsistent, 5 unsupported (m = n).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "immanant/immanant.hpp"

namespace {

using namespace immanant;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailed = 1;
constexpr int kExitInput = 2;
constexpr std::size_t kChunk = 256;

/// Input or argument problem; reported on stderr with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string input = "-";
    std::string output = "-";
    std::string format = "auto";
    std::string kind;
    std::uint64_t seed = 1;
    std::size_t crt_threshold = LinalgOptions{}.crt_threshold;
    std::size_t charpoly_threshold = LinalgOptions{}.modular_charpoly_threshold;
    std::size_t threads = 0;

    LinalgOptions linalg(std::size_t inner_threads) const {
        LinalgOptions o;
        o.crt_threshold = crt_threshold;
        o.modular_charpoly_threshold = charpoly_threshold;
        o.threads = inner_threads;
        return o;
    }
};

class Io {
public:
    explicit Io(const Config& c) {
        if (c.input == "-") {
            in_ = &std::cin;
        } else {
            file_in_ = std::make_unique<std::ifstream>(c.input);
            if (!*file_in_)
                throw InputError("cannot open input '" + c.input + "'");
            in_ = file_in_.get();
        }
        if (c.output == "-") {
            out_ = &std::cout;
        } else {
            file_out_ = std::make_unique<std::ofstream>(c.output);
            if (!*file_out_)
                throw InputError("cannot open output '" + c.output + "'");
            out_ = file_out_.get();
        }
    }
    std::istream& in() { return *in_; }
    std::ostream& out() { return *out_; }

private:
    std::unique_ptr<std::ifstream> file_in_;
    std::unique_ptr<std::ofstream> file_out_;
    std::istream* in_ = nullptr;
    std::ostream* out_ = nullptr;
};

struct Record {
    std::size_t line = 0;
    std::string text;
};

/// Reads non-blank lines in chunks of kChunk and hands each chunk to `sink`.
template <typename Sink>
void for_each_chunk(std::istream& in, Sink&& sink) {
    std::vector<Record> chunk;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto t = detail::trim_line(line);
        if (t.empty())
            continue;
        chunk.push_back({number, std::string(t)});
        if (chunk.size() == kChunk) {
            sink(chunk);
            chunk.clear();
        }
    }
    if (!chunk.empty())
        sink(chunk);
}

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AnyGraph parse_record(const Record& r, const std::string& format) {
    try {
        if (format == "graph6")
            return parse_graph6(r.text);
        if (format == "sparse6")
            return parse_sparse6(r.text);
        if (format == "digraph6")
            return parse_digraph6(r.text);
        if (format == "json")
            return parse_edge_list_json(std::string_view(r.text));
        if (!r.text.empty() && r.text.front() == '{')
            return parse_edge_list_json(std::string_view(r.text));
        return parse_graph_line(r.text);
    } catch (const ParseError& e) {
        throw InputError("line " + std::to_string(r.line) + ": " + e.what());
    } catch (const ValidationError& e) {
        throw InputError("line " + std::to_string(r.line) + ": " + e.what());
    }
}

/// One graph per line; JSON edge lists are one compact object per line.
std::vector<std::pair<Record, AnyGraph>> parse_records(const std::vector<Record>& chunk, const std::string& format) {
    std::vector<std::pair<Record, AnyGraph>> out;
    out.reserve(chunk.size());
    for (const auto& r : chunk)
        out.emplace_back(r, parse_record(r, format));
    return out;
}

bool is_directed(const AnyGraph& g) { return std::holds_alternative<Digraph>(g); }

/// Resolves --kind against the input's direction. Empty kind means tau for
/// graphs and g1 for digraphs.
std::optional<ImmanantKind> resolve_kind(const std::string& kind, const AnyGraph& g, std::size_t line) {
    const bool directed = is_directed(g);
    if (kind.empty())
        return directed ? std::optional(ImmanantKind::g1()) : std::nullopt;
    if (kind == "tau") {
        if (directed)
            throw InputError("line " + std::to_string(line) + ": kind tau requires an undirected graph");
        return std::nullopt;
    }
    auto k = kind_from_name(kind);
    if (!k)
        throw InputError("unknown kind '" + kind + "'");
    if (!directed)
        throw InputError("line " + std::to_string(line) + ": kind " + kind + " requires a digraph");
    return k;
}

/// Runs `work` on each item, in parallel across items when there are enough
/// of them, otherwise with the threads handed to the kernels. Output order is
/// the input order.
template <typename T, typename Work>
std::vector<std::string> map_ordered(const std::vector<T>& items, const Config& cfg, Work&& work) {
    std::vector<std::string> out(items.size());
    const std::size_t threads = resolve_threads(cfg.threads);
    const bool outer = items.size() > 1 && threads > 1;
    const LinalgOptions opt = cfg.linalg(outer ? 1 : threads);
    parallel_for(items.size(), outer ? threads : 1, [&](std::size_t i) { out[i] = work(items[i], opt); });
    return out;
}

void add_common(CLI::App* sub, Config& cfg) {
    sub->add_option("input", cfg.input, "Input file, '-' for stdin")->capture_default_str();
    sub->add_option("-o,--out", cfg.output, "Output file, '-' for stdout")->capture_default_str();
    sub->add_option("--format", cfg.format, "Input format")
        ->check(CLI::IsMember({"auto", "graph6", "sparse6", "digraph6", "json"}))
        ->capture_default_str();
    sub->add_option("--kind", cfg.kind, "tau for graphs; g1, g2 or g3 for digraphs")
            ->check(CLI::IsMember({"tau", "g1", "g2", "g3"}));
    sub->add_option("--crt-threshold", cfg.crt_threshold, "Matrix order above which determinants use CRT")
        ->capture_default_str();
    sub->add_option("--charpoly-threshold", cfg.charpoly_threshold,
                    "Matrix order above which characteristic polynomials use the modular route")
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads, "Worker threads, 0 for IMMANANT_THREADS or all cores")
        ->capture_default_str();
}

// ---- compute / deck ------------------------------------------------------

int run_graph_stream(const Config& cfg, const std::function<std::string(const Record&, const AnyGraph&,
                                                                         const LinalgOptions&)>& work) {
    Io io(cfg);
    for_each_chunk(io.in(), [&](const std::vector<Record>& chunk) {
        const auto parsed = parse_records(chunk, cfg.format);
        for (const auto& [rec, g] : parsed)
            resolve_kind(cfg.kind, g, rec.line);
        for (const auto& s : map_ordered(parsed, cfg, [&](const auto& item, const LinalgOptions& opt) {
                 return work(item.first, item.second, opt);
             }))
            io.out() << s << '\n';
        io.out().flush();
    });
    return kExitOk;
}

int cmd_compute(const Config& cfg) {
    return run_graph_stream(cfg, [&](const Record& rec, const AnyGraph& g, const LinalgOptions& opt) {
        const auto kind = resolve_kind(cfg.kind, g, rec.line);
        IntPolynomial p = kind ? g_poly(std::get<Digraph>(g), *kind, CharPolyStrategy::Auto, opt)
                               : tau(std::get<Graph>(g), CharPolyStrategy::Auto, opt);
        json j = {{"input", rec.text}, {"kind", kind ? kind->name() : "tau"}, {"poly", to_json(p)}};
        return j.dump();
    });
}

int cmd_deck(const Config& cfg) {
    return run_graph_stream(cfg, [&](const Record& rec, const AnyGraph& g, const LinalgOptions& opt) {
        const auto kind = resolve_kind(cfg.kind, g, rec.line);
        return kind ? to_json(make_deck(std::get<Digraph>(g), *kind, opt)).dump()
                    : to_json(make_deck(std::get<Graph>(g), opt)).dump();
    });
}

// ---- reconstruct ---------------------------------------------------------

int exit_code(ReconstructionStatus s) {
    switch (s) {
    case ReconstructionStatus::Complete:
        return 0;
    case ReconstructionStatus::Underdetermined:
        return 3;
    case ReconstructionStatus::Inconsistent:
        return 4;
    case ReconstructionStatus::Unsupported:
        return 5;
    }
    return kExitInput;
}

/// Decks come as one JSON document (an object or an array of objects) or as
/// JSON-lines.
std::vector<std::pair<std::size_t, json>> read_decks(std::istream& in) {
    const std::string text = slurp(in);
    std::vector<std::pair<std::size_t, json>> out;
    json whole = json::parse(text, nullptr, false);
    if (!whole.is_discarded()) {
        if (whole.is_array()) {
            for (std::size_t i = 0; i < whole.size(); ++i)
                out.emplace_back(i + 1, whole[i]);
        } else {
            out.emplace_back(1, whole);
        }
        return out;
    }
    std::istringstream lines(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(lines, line)) {
        ++number;
        if (detail::trim_line(line).empty())
            continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw InputError("line " + std::to_string(number) + ": invalid JSON");
        out.emplace_back(number, std::move(j));
    }
    return out;
}

int cmd_reconstruct(const Config& cfg, const std::optional<std::string>& free_value) {
    std::optional<BigInt> side;
    if (free_value) {
        try {
            side = from_decimal(*free_value);
        } catch (const std::exception&) {
            throw InputError("--free-value must be a decimal integer");
        }
    }
    Io io(cfg);
    int code = kExitOk;
    for (const auto& [line, doc] : read_decks(io.in())) {
        AnyDeck deck;
        try {
            deck = deck_from_json(doc);
        } catch (const MalformedDeck& e) {
            throw InputError("deck " + std::to_string(line) + ": " + e.what());
        }
        ReconstructionReport rep;
        if (auto* u = std::get_if<UndirectedDeck>(&deck)) {
            if (!cfg.kind.empty() && cfg.kind != "tau")
                throw InputError("deck " + std::to_string(line) + ": undirected deck but --kind " + cfg.kind);
            rep = reconstruct_tau(*u, side);
        } else {
            const auto& d = std::get<DirectedDeck>(deck);
            if (!cfg.kind.empty() && (cfg.kind == "tau" || (d.kind && d.kind->name() != cfg.kind)))
                throw InputError("deck " + std::to_string(line) + ": deck kind does not match --kind " + cfg.kind);
            rep = reconstruct_g(d, side);
        }
        io.out() << to_json(rep).dump() << '\n';
        if (code == kExitOk)
            code = exit_code(rep.status);
    }
    return code;
}

// ---- verify --------------------------------------------------------------

enum class Family { Symmetric, General, Graph, Digraph };

struct LemmaInfo {
    std::string token;
    Family family;
};

const std::vector<LemmaInfo>& lemma_table() {
    static const std::vector<LemmaInfo> table = {
        {"2.2", Family::Symmetric}, {"2.3", Family::Symmetric}, {"2.4", Family::Symmetric},
        {"eq3", Family::Symmetric}, {"eq4", Family::Symmetric}, {"3.2", Family::General},
        {"3.3", Family::General},   {"3.4", Family::General},   {"eq13", Family::General},
        {"eq8", Family::General},   {"2.5", Family::Graph},     {"3.5", Family::Digraph},
        {"eq22", Family::Digraph},
    };
    return table;
}

std::vector<LemmaInfo> select_lemmas(const std::string& spec) {
    std::vector<LemmaInfo> out;
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok == "all") {
            out = lemma_table();
            return out;
        }
        bool found = false;
        for (const auto& l : lemma_table())
            if (l.token == tok) {
                out.push_back(l);
                found = true;
            }
        if (!found)
            throw InputError("unknown identity '" + tok + "'");
    }
    if (out.empty())
        throw InputError("no identity selected");
    return out;
}

/// One instance for the identity suites.
struct Instance {
    std::variant<IntMatrix, Graph, Digraph> value;
    std::optional<std::uint64_t> seed;
};

struct RandomRequest {
    std::optional<std::string> matrix;  // "symmetric" or "general"
    bool directed = false;
    std::size_t size = 6;
    std::size_t count = 10;
    RandomSpec spec;
};

/// Grammar: comma-separated tokens; "symmetric"/"general" ask for integer
/// matrices of order k=..., entries lo=..hi=; otherwise graphs of order n=...
/// with edge probability p=..., "directed" for digraphs. count= and seed=.
RandomRequest parse_random(const std::string& text, std::uint64_t default_seed) {
    RandomRequest req;
    req.spec.seed = default_seed;
    std::stringstream ss(text);
    try {
        for (std::string tok; std::getline(ss, tok, ',');) {
            const auto eq = tok.find('=');
            const std::string key = tok.substr(0, eq);
            const std::string val = eq == std::string::npos ? "" : tok.substr(eq + 1);
            if (eq == std::string::npos) {
                if (key == "symmetric" || key == "general")
                    req.matrix = key;
                else if (key == "directed" || key == "digraph")
                    req.directed = true;
                else if (key == "undirected" || key == "graph")
                    req.directed = false;
                else
                    throw InputError("unknown --random token '" + tok + "'");
            } else if (key == "k" || key == "n") {
                req.size = std::stoul(val);
            } else if (key == "p") {
                parse_probability(val, req.spec.p_num, req.spec.p_den);
            } else if (key == "count") {
                req.count = std::stoul(val);
            } else if (key == "seed") {
                req.spec.seed = std::stoull(val);
            } else if (key == "lo") {
                req.spec.entry_lo = std::stol(val);
            } else if (key == "hi") {
                req.spec.entry_hi = std::stol(val);
            } else {
                throw InputError("unknown --random key '" + key + "'");
            }
        }
    } catch (const std::logic_error& e) {
        throw InputError("invalid --random value in '" + text + "'");
    }
    req.spec.validate();
    return req;
}

/// Whether a random request can produce instances for a family.
bool random_compatible(const RandomRequest& req, Family family) {
    if (req.matrix)
        return family == Family::General || (family == Family::Symmetric && *req.matrix == "symmetric");
    return !(req.directed && (family == Family::Symmetric || family == Family::Graph));
}

std::vector<Instance> random_instances(const RandomRequest& req, Family family) {
    std::vector<Instance> out;
    out.reserve(req.count);
    for (std::size_t i = 0; i < req.count; ++i) {
        RandomSpec s = req.spec;
        s.n = req.size;
        s.seed = req.spec.seed + i;
        Instance inst{IntMatrix{}, s.seed};
        if (req.matrix)
            inst.value = *req.matrix == "symmetric" ? random_symmetric_matrix(s) : random_matrix(s);
        else if (family == Family::Digraph || req.directed)
            inst.value = random_digraph(s);
        else
            inst.value = random_graph(s);
        out.push_back(std::move(inst));
    }
    return out;
}

/// Whether an instance feeds a family, and the matrix it contributes.
std::optional<IntMatrix> matrix_for(const Instance& inst, Family family) {
    if (auto* m = std::get_if<IntMatrix>(&inst.value)) {
        if (family == Family::Symmetric && !m->is_symmetric())
            return std::nullopt;
        return *m;
    }
    if (auto* g = std::get_if<Graph>(&inst.value))
        return adjacency_matrix(*g);
    if (family == Family::General)
        return adjacency_matrix(std::get<Digraph>(inst.value));
    return std::nullopt;
}

std::vector<IdentityReport> run_lemma(const LemmaInfo& lemma, const Instance& inst,
                                      const std::vector<ImmanantKind>& kinds, const LinalgOptions& opt) {
    std::vector<IdentityReport> out;
    const std::string& t = lemma.token;
    if (lemma.family == Family::Graph) {
        if (auto* g = std::get_if<Graph>(&inst.value)) {
            out.push_back(verify_lemma_2_5(*g, opt));
            out.push_back(verify_lemma_2_5_masked(*g, opt));
        }
    } else if (lemma.family == Family::Digraph) {
        if (auto* d = std::get_if<Digraph>(&inst.value))
            for (const auto& k : kinds) {
                if (t == "3.5") {
                    out.push_back(verify_lemma_3_5(*d, k, opt));
                    out.push_back(verify_lemma_3_5_masked(*d, k, opt));
                } else {
                    out.push_back(verify_eq22(*d, k, opt));
                }
            }
    } else if (auto m = matrix_for(inst, lemma.family)) {
        const bool needs_two = t == "2.2" || t == "2.3" || t == "3.2" || t == "3.3" || t == "3.4";
        if (needs_two && m->size() < 2)
            return out;
        if (t == "2.2")
            out.push_back(verify_lemma_2_2(*m, opt));
        else if (t == "2.3")
            out.push_back(verify_lemma_2_3(*m, opt));
        else if (t == "2.4")
            out.push_back(verify_lemma_2_4(*m, opt));
        else if (t == "eq3")
            out.push_back(verify_eq3(*m, opt));
        else if (t == "eq4")
            out.push_back(verify_eq4(*m, opt));
        else if (t == "3.2")
            out.push_back(verify_lemma_3_2(*m, opt));
        else if (t == "3.3")
            out.push_back(verify_lemma_3_3(*m, opt));
        else if (t == "3.4")
            out.push_back(verify_cor_3_4(*m, opt));
        else if (t == "eq13")
            out.push_back(verify_eq13(*m, opt));
        else if (t == "eq8")
            out.push_back(verify_derivative_expansion(*m, opt));
    }
    for (auto& r : out)
        r.seed = inst.seed;
    return out;
}

struct VerifyTally {
    std::size_t reports = 0;
    bool all_hold = true;
};

void emit_reports(const std::vector<std::pair<LemmaInfo, Instance>>& jobs, const std::vector<ImmanantKind>& kinds,
                  const Config& cfg, std::ostream& out, VerifyTally& tally) {
    std::vector<std::vector<IdentityReport>> results(jobs.size());
    const std::size_t threads = resolve_threads(cfg.threads);
    const bool outer = jobs.size() > 1 && threads > 1;
    const LinalgOptions opt = cfg.linalg(outer ? 1 : threads);
    parallel_for(jobs.size(), outer ? threads : 1,
                 [&](std::size_t i) { results[i] = run_lemma(jobs[i].first, jobs[i].second, kinds, opt); });
    for (const auto& batch : results)
        for (const auto& r : batch) {
            out << to_json(r).dump() << '\n';
            ++tally.reports;
            tally.all_hold = tally.all_hold && r.holds;
        }
    out.flush();
}

int cmd_verify(const Config& cfg, const std::string& lemma_spec, const std::optional<std::string>& corpus,
               const std::optional<std::string>& random) {
    const auto lemmas = select_lemmas(lemma_spec);
    std::vector<ImmanantKind> kinds;
    if (cfg.kind.empty()) {
        kinds = {ImmanantKind::g1(), ImmanantKind::g2(), ImmanantKind::g3()};
    } else if (cfg.kind == "tau") {
        for (const auto& l : lemmas)
            if (l.family == Family::Digraph)
                throw InputError("identity " + l.token + " needs --kind g1, g2 or g3");
    } else {
        kinds = {*kind_from_name(cfg.kind)};
    }
    if (corpus && random)
        throw InputError("give either --corpus or --random");
    if (!corpus && !random)
        throw InputError("verify needs --corpus FILE or --random SPEC");

    VerifyTally tally;
    if (random) {
        Io out_only(Config{.input = "-", .output = cfg.output});
        const RandomRequest req = parse_random(*random, cfg.seed);
        for (const auto& l : lemmas) {
            if (!random_compatible(req, l.family)) {
                if (lemmas.size() == 1)
                    throw InputError("--random " + *random + " cannot produce instances for identity " + l.token);
                continue;
            }
            std::vector<std::pair<LemmaInfo, Instance>> jobs;
            for (auto& inst : random_instances(req, l.family))
                jobs.emplace_back(l, std::move(inst));
            emit_reports(jobs, kinds, cfg, out_only.out(), tally);
        }
    } else {
        Config io_cfg = cfg;
        io_cfg.input = *corpus;
        Io files(io_cfg);
        for_each_chunk(files.in(), [&](const std::vector<Record>& chunk) {
            std::vector<std::pair<LemmaInfo, Instance>> jobs;
            for (auto& [rec, g] : parse_records(chunk, cfg.format)) {
                Instance inst{IntMatrix{}, std::nullopt};
                if (is_directed(g))
                    inst.value = std::get<Digraph>(g);
                else
                    inst.value = std::get<Graph>(g);
                for (const auto& l : lemmas)
                    jobs.emplace_back(l, inst);
            }
            emit_reports(jobs, kinds, cfg, files.out(), tally);
        });
    }
    if (tally.reports == 0)
        throw InputError("no instance matched the selected identities");
    return tally.all_hold ? kExitOk : kExitIdentityFailed;
}

// ---- bench ---------------------------------------------------------------

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    try {
        for (std::string tok; std::getline(ss, tok, ',');)
            out.push_back(std::stoul(tok));
    } catch (const std::logic_error&) {
        throw InputError("invalid --sizes '" + text + "'");
    }
    return out;
}

std::size_t max_bits(const IntPolynomial& p) {
    std::size_t b = 0;
    for (const auto& c : p.coeffs())
        b = std::max(b, bit_length(c));
    return b;
}

int cmd_bench(const Config& cfg, const std::string& target, const std::string& sizes_text,
              const std::string& probability, std::vector<std::string> strategies) {
    Io io(Config{.input = "-", .output = cfg.output});
    RandomSpec base;
    base.seed = cfg.seed;
    parse_probability(probability, base.p_num, base.p_den);
    const LinalgOptions opt = cfg.linalg(resolve_threads(cfg.threads));
    std::optional<ImmanantKind> kind;
    if (target == "g")
        kind = cfg.kind.empty() || cfg.kind == "tau" ? ImmanantKind::g1() : *kind_from_name(cfg.kind);

    if (strategies.empty()) {
        if (target == "det")
            strategies = {"bareiss", "crt"};
        else
            strategies = {"auto", "modular"};
    }
    io.out() << "size,strategy,millis,max_coeff_bits\n";
    for (std::size_t n : parse_sizes(sizes_text)) {
        RandomSpec s = base;
        s.n = n;
        for (const auto& strategy : strategies) {
            const auto start = std::chrono::steady_clock::now();
            std::size_t bits = 0;
            if (target == "det") {
                const IntMatrix m = random_matrix(s);
                DetStrategy ds;
                if (strategy == "bareiss")
                    ds = DetStrategy::Bareiss;
                else if (strategy == "crt")
                    ds = DetStrategy::Crt;
                else if (strategy == "auto")
                    ds = DetStrategy::Auto;
                else
                    throw InputError("unknown determinant strategy '" + strategy + "'");
                bits = bit_length(det(m, ds, opt));
            } else {
                CharPolyStrategy cs;
                if (strategy == "auto")
                    cs = CharPolyStrategy::Auto;
                else if (strategy == "modular")
                    cs = CharPolyStrategy::Modular;
                else if (strategy == "faddeev-leverrier")
                    cs = CharPolyStrategy::FaddeevLeVerrier;
                else if (strategy == "interpolation")
                    cs = CharPolyStrategy::Interpolation;
                else
                    throw InputError("unknown polynomial strategy '" + strategy + "'");
                bits = kind ? max_bits(g_poly(random_digraph(s), *kind, cs, opt))
                            : max_bits(tau(random_graph(s), cs, opt));
            }
            const auto ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            io.out() << n << ',' << strategy << ',' << static_cast<long long>(ms + 0.5) << ',' << bits << '\n';
            io.out().flush();
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second immanantal polynomials of graphs and digraphs"};
    app.require_subcommand(1);

    Config cfg;
    auto* compute = app.add_subcommand("compute", "Polynomial of each input graph, as JSON-lines");
    add_common(compute, cfg);

    auto* deck = app.add_subcommand("deck", "Edge deck of each input graph, as JSON-lines");
    add_common(deck, cfg);

    auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild the polynomial from deck JSON");
    add_common(reconstruct, cfg);
    std::optional<std::string> free_value;
    reconstruct->add_option("--free-value", free_value, "Value for the coefficient the deck leaves free");

    auto* verify = app.add_subcommand("verify", "Check identities on a corpus or random instances");
    add_common(verify, cfg);
    std::string lemmas = "all";
    std::optional<std::string> corpus, random;
    verify->add_option("--lemma", lemmas, "Comma list of 2.2 2.3 2.4 2.5 3.2 3.3 3.4 3.5 eq3 eq4 eq8 eq13 eq22, or all")
        ->capture_default_str();
    verify->add_option("--corpus", corpus, "Graph file, one graph per line");
    verify->add_option("--random", random, "e.g. n=6,p=1/2,count=100,seed=7 or symmetric,k=6,count=50,seed=1");
    verify->add_option("--seed", cfg.seed, "Base seed when --random has no seed=")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Time kernels on seeded random inputs; CSV output");
    add_common(bench, cfg);
    std::string target = "tau", sizes = "50,100", probability = "1/2";
    std::vector<std::string> strategies;
    bench->add_option("--target", target, "tau, g or det")
        ->check(CLI::IsMember({"tau", "g", "det"}))
        ->capture_default_str();
    bench->add_option("--sizes", sizes, "Comma list of orders")->capture_default_str();
    bench->add_option("--p", probability, "Edge probability")->capture_default_str();
    bench->add_option("--strategy", strategies, "Strategies to time (repeatable)");
    bench->add_option("--seed", cfg.seed, "Seed for the random inputs")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*compute)
            return cmd_compute(cfg);
        if (*deck)
            return cmd_deck(cfg);
        if (*reconstruct)
            return cmd_reconstruct(cfg, free_value);
        if (*verify)
            return cmd_verify(cfg, lemmas, corpus, random);
        if (*bench)
            return cmd_bench(cfg, target, sizes, probability, strategies);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
