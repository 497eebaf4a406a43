// mmsym: command-line front end for the exact bilinear-algorithm library.
// JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 = pass,
// 1 = check failed, 2 = usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mmsym/algebra.hpp"
#include "mmsym/engine.hpp"
#include "mmsym/errors.hpp"
#include "mmsym/groupid.hpp"
#include "mmsym/serialize.hpp"
#include "mmsym/symmetry.hpp"

using mmsym::BilinearAlgorithm;
using mmsym::ExactMatrix;
using mmsym::IsotropyElement;
using mmsym::Rational;
using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "mmsym/1";

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw mmsym::resource_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

BilinearAlgorithm load_builtin(const std::string& name)
{
    if (name == "strassen")
        return mmsym::strassen();
    if (name == "laderman")
        return mmsym::laderman();
    if (name == "hopcroft")
        return mmsym::hopcroft();
    if (name.rfind("naive:", 0) == 0) {
        std::size_t m = 0, n = 0, p = 0;
        char x1 = 0, x2 = 0;
        std::istringstream in(name.substr(6));
        if (in >> m >> x1 >> n >> x2 >> p && x1 == 'x' && x2 == 'x' && m && n && p &&
            in.eof())
            return mmsym::naive(m, n, p);
    }
    throw mmsym::lookup_error("unknown builtin algorithm: " + name +
                              " (expected strassen, laderman, hopcroft, or naive:MxNxP)");
}

struct AlgorithmSource {
    std::string builtin;
    std::string file;

    void add_flags(CLI::App* cmd)
    {
        auto* b = cmd->add_option("--builtin", builtin,
                                  "builtin name: strassen, laderman, hopcroft, naive:MxNxP");
        auto* f = cmd->add_option("--file", file, "algorithm JSON file");
        b->excludes(f);
    }

    BilinearAlgorithm load(const std::string& positional = "") const
    {
        if (!builtin.empty())
            return load_builtin(builtin);
        if (!file.empty())
            return mmsym::parse_algorithm(slurp(file));
        if (!positional.empty())
            return mmsym::parse_algorithm(slurp(positional));
        throw mmsym::lookup_error("no algorithm given: use --builtin or --file");
    }
};

ojson matrix_json(const ExactMatrix& mat)
{
    return ojson::parse(mmsym::serialize_matrix(mat));
}

ojson report_json(const mmsym::VerificationReport& report)
{
    ojson out;
    out["pass"] = report.pass;
    out["equations"] = report.equations;
    out["violations"] = report.violations;
    ojson first = ojson::array();
    for (const mmsym::BrentViolation& v : report.first_violations) {
        ojson item;
        item["index"] = v.index;
        item["residual"] = mmsym::rational_to_string(v.residual);
        first.push_back(item);
    }
    out["first_violations"] = first;
    return out;
}

ojson fingerprint_json(const mmsym::GroupFingerprint& fp)
{
    ojson out;
    out["order"] = fp.order;
    ojson hist;
    for (const auto& [order, count] : fp.element_order_histogram)
        hist[std::to_string(order)] = count;
    out["element_order_histogram"] = hist;
    out["abelian"] = fp.is_abelian;
    out["center_size"] = fp.center_size;
    return out;
}

void emit(const ojson& payload)
{
    std::cout << payload.dump(2) << "\n";
}

int cmd_verify(const AlgorithmSource& source, const std::string& positional)
{
    BilinearAlgorithm alg = source.load(positional);
    mmsym::VerificationReport brent = mmsym::brent_check(alg);
    mmsym::VerificationReport sum = mmsym::tensor_sum_check(alg);
    ojson out;
    out["schema"] = kSchema;
    out["command"] = "verify";
    out["name"] = alg.name;
    out["m"] = alg.m;
    out["n"] = alg.n;
    out["p"] = alg.p;
    out["r"] = alg.r();
    out["brent"] = report_json(brent);
    out["tensor_sum"] = report_json(sum);
    emit(out);
    if (!brent.pass || !sum.pass) {
        std::cerr << "verification failed: " << brent.violations
                  << " violated equation(s)\n";
        return 1;
    }
    return 0;
}

int cmd_act(const AlgorithmSource& source, const std::string& element_path)
{
    BilinearAlgorithm alg = source.load();
    IsotropyElement g = mmsym::parse_element(slurp(element_path));
    BilinearAlgorithm image = mmsym::act_on_algorithm(g, alg);
    bool automorphism = mmsym::is_automorphism(g, alg);
    ojson out;
    out["schema"] = kSchema;
    out["command"] = "act";
    out["element"] = ojson::parse(mmsym::serialize_element(g));
    out["automorphism"] = automorphism;
    out["image"] = ojson::parse(mmsym::serialize_algorithm(image));
    emit(out);
    return automorphism ? 0 : 1;
}

std::vector<IsotropyElement> parse_generators(const std::string& path)
{
    ojson doc = ojson::parse(slurp(path), nullptr, false);
    if (doc.is_discarded() || !doc.is_array())
        throw mmsym::parse_error("generators file must be a JSON array of elements");
    std::vector<IsotropyElement> gens;
    for (const auto& item : doc)
        gens.push_back(mmsym::parse_element(item.dump()));
    return gens;
}

std::vector<Rational> parse_pool_entries(const std::string& text)
{
    std::vector<Rational> entries;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ','))
        entries.push_back(mmsym::parse_rational(token));
    if (entries.empty())
        throw mmsym::parse_error("empty pool entry list");
    return entries;
}

int cmd_autgroup(const AlgorithmSource& source, const std::string& generators_path,
                 bool search, const std::string& pool_entries,
                 unsigned long long budget)
{
    BilinearAlgorithm alg = source.load();
    mmsym::Format format{alg.m, alg.n, alg.p};

    ojson out;
    out["schema"] = kSchema;
    out["command"] = "autgroup";
    out["name"] = alg.name;

    std::vector<IsotropyElement> group;
    if (search) {
        mmsym::SearchResult result =
            mmsym::search_automorphisms(alg, parse_pool_entries(pool_entries), budget);
        out["search"] = {{"complete", result.complete},
                         {"candidates_tried", result.candidates_tried}};
        group = result.elements;
        if (!result.complete)
            std::cerr << "warning: search budget exhausted; group may be incomplete\n";
    } else {
        std::vector<IsotropyElement> gens;
        if (!generators_path.empty())
            gens = parse_generators(generators_path);
        for (const IsotropyElement& g : gens)
            if (!mmsym::is_automorphism(g, alg))
                throw mmsym::contract_error("generator is not an automorphism: " +
                                            g.to_key());
        group = mmsym::group_closure(format, gens);
    }

    mmsym::GroupFingerprint fp = mmsym::fingerprint(group);
    out["order"] = group.size();
    out["fingerprint"] = fingerprint_json(fp);
    out["identification"] = mmsym::identify(fp);

    mmsym::OrbitPartition partition = mmsym::orbits(group, alg);
    ojson blocks = ojson::array();
    for (const auto& block : partition.blocks) {
        ojson indices = ojson::array();
        for (std::size_t i : block)
            indices.push_back(i + 1);
        blocks.push_back(indices);
    }
    out["orbits"] = blocks;

    ojson elements = ojson::array();
    for (const IsotropyElement& g : group)
        elements.push_back(ojson::parse(mmsym::serialize_element(g)));
    out["elements"] = elements;
    emit(out);
    return 0;
}

int cmd_multiply(const AlgorithmSource& source, const std::string& x_path,
                 const std::string& y_path, bool recursive, std::size_t cutoff)
{
    BilinearAlgorithm alg = source.load();
    ExactMatrix x = mmsym::parse_matrix(slurp(x_path));
    ExactMatrix y = mmsym::parse_matrix(slurp(y_path));
    auto [product, ops] = recursive ? mmsym::multiply_recursive(alg, x, y, cutoff)
                                    : mmsym::multiply_once(alg, x, y);
    ojson out;
    out["schema"] = kSchema;
    out["command"] = "multiply";
    out["name"] = alg.name;
    out["recursive"] = recursive;
    if (recursive)
        out["cutoff"] = cutoff;
    out["product"] = matrix_json(product);
    out["ops"] = {{"nonscalar_mults", ops.nonscalar_mults},
                  {"scalar_mults", ops.scalar_mults},
                  {"additions", ops.additions}};
    emit(out);
    return 0;
}

// Writes a column or row vector in compact index notation: entries are
// summed as signed 1-based positions, e.g. (1,-1,0) -> "1-2".
std::string vector_notation(const ExactMatrix& vec)
{
    std::string text;
    for (std::size_t i = 0; i < vec.rows() * vec.cols(); ++i) {
        const Rational& q = vec.rows() == 1 ? vec.at(0, i) : vec.at(i, 0);
        if (q == 0)
            continue;
        std::string index = std::to_string(i + 1);
        if (q == 1)
            text += text.empty() ? index : "+" + index;
        else if (q == -1)
            text += "-" + index;
        else
            text += (text.empty() ? "" : "+") + ("(" + mmsym::rational_to_string(q) + ")") +
                    index;
    }
    return text;
}

int cmd_table1()
{
    BilinearAlgorithm lad = mmsym::laderman();
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < lad.triples.size(); ++i) {
        if (mmsym::triple_type(lad.triples[i]) != mmsym::TripleType{1, 1, 1})
            continue;
        mmsym::FineFactorization f = mmsym::fine_factorization(lad.triples[i]);
        ojson row;
        row["index"] = i + 1;
        const ExactMatrix* vectors[6] = {&f.d, &f.e_prime, &f.e,
                                         &f.f_prime, &f.f, &f.d_prime};
        const char* labels[6] = {"d", "e_prime", "e", "f_prime", "f", "d_prime"};
        std::string pattern;
        for (std::size_t k = 0; k < 6; ++k) {
            row[labels[k]] = matrix_json(*vectors[k]);
            if (k)
                pattern += " ";
            pattern += vector_notation(*vectors[k]);
        }
        row["pattern"] = pattern;
        rows.push_back(row);
    }
    ojson out;
    out["schema"] = kSchema;
    out["command"] = "table1";
    out["rows"] = rows;
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact bilinear matrix-multiplication algorithm toolkit"};
    app.require_subcommand(1);

    AlgorithmSource verify_source;
    std::string verify_path;
    CLI::App* verify = app.add_subcommand("verify", "check an algorithm's defining equations");
    verify_source.add_flags(verify);
    verify->add_option("path", verify_path, "algorithm JSON file (alternative to --file)");

    AlgorithmSource act_source;
    std::string element_path;
    CLI::App* act = app.add_subcommand("act", "apply a symmetry-group element to an algorithm");
    act_source.add_flags(act);
    act->add_option("--element", element_path, "group-element JSON file")->required();

    AlgorithmSource aut_source;
    std::string generators_path, pool_entries = "-1,0,1";
    bool search = false;
    unsigned long long budget = 10000000ULL;
    CLI::App* autgroup =
        app.add_subcommand("autgroup", "automorphism group: closure, fingerprint, orbits");
    aut_source.add_flags(autgroup);
    autgroup->add_option("--generators", generators_path,
                         "JSON array of generator elements");
    autgroup->add_flag("--search", search, "search for automorphisms instead");
    autgroup->add_option("--pool-entries", pool_entries,
                         "comma-separated matrix entry pool for --search");
    autgroup->add_option("--budget", budget, "work budget for --search");

    AlgorithmSource mul_source;
    std::string x_path, y_path;
    bool recursive = false;
    std::size_t cutoff = 1;
    CLI::App* multiply = app.add_subcommand("multiply", "run the algorithm on two matrices");
    mul_source.add_flags(multiply);
    multiply->add_option("x", x_path, "left matrix JSON file")->required();
    multiply->add_option("y", y_path, "right matrix JSON file")->required();
    multiply->add_flag("--recursive", recursive, "recurse on square inputs with padding");
    multiply->add_option("--cutoff", cutoff, "naive base-case size for --recursive");

    app.add_subcommand("table1",
                       "fine-factorization table of Laderman's rank-one tensors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(verify_source, verify_path);
        if (act->parsed())
            return cmd_act(act_source, element_path);
        if (autgroup->parsed())
            return cmd_autgroup(aut_source, generators_path, search, pool_entries, budget);
        if (multiply->parsed())
            return cmd_multiply(mul_source, x_path, y_path, recursive, cutoff);
        return cmd_table1();
    } catch (const mmsym::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ojson::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
