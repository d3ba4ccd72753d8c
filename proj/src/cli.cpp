#include "knutson/cli.hpp"

#include "knutson/groups.hpp"
#include "knutson/numtheory.hpp"
#include "knutson/sequences.hpp"
#include "knutson/serialize.hpp"
#include "knutson/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

namespace knutson {

namespace {

constexpr std::uint64_t kCriterionSequenceCap = 10'000'000;
constexpr int kZeroColumnCap = 30;
constexpr int kCoreCountCap = 80;

struct Options {
    std::string format = "text";
    bool format_given = false;
    bool no_cache = false;
    std::string family;
    int n = 0;
    std::string seq_id;
    std::uint64_t limit = 0;
    bool bfile = false;
    std::string character;
    std::string rho = "regular";
    bool rho_given = false;
    bool search_corrections = false;
    std::string suite;
    int q = 0;
    bool q_given = false;
    int t = 0;
    bool list = false;
    bool brute_force = false;
};

/// Left-aligned columns separated by two spaces.
void print_grid(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i)
                width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size())
                line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            out << (i ? "," : "") << csv_field(r[i]);
        out << '\n';
    }
}

Json rational_json(const Rational& r) { return to_json(AlgebraicNumber(r)); }

CharacterTable load_table(const GroupSpec& spec, const Options& opt, std::ostream& err)
{
    std::optional<TableCache> cache;
    if (!opt.no_cache)
        if (auto dir = TableCache::default_dir())
            cache.emplace(*dir);
    if (cache)
        if (auto t = cache->load(spec.key()))
            return *t;
    CharacterTable t = build_table(spec);
    if (cache) {
        try {
            cache->store(spec.key(), t);
        } catch (const std::exception& e) {
            err << "warning: table cache not written: " << e.what() << '\n';
        }
    }
    return t;
}

int cmd_table(const Options& opt, std::ostream& out, std::ostream& err)
{
    const GroupSpec spec = parse_group(opt.family, opt.n);
    const CharacterTable t = load_table(spec, opt, err);
    if (opt.format == "json") {
        out << to_json(t).dump(2) << '\n';
        return exit_ok;
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"class"}, sizes{"size"};
    for (const auto& c : t.classes) {
        head.push_back(c.label);
        sizes.push_back(c.size.get_str());
    }
    rows.push_back(head);
    rows.push_back(sizes);
    for (const auto& chi : t.irreducibles) {
        std::vector<std::string> r{chi.label};
        for (const auto& v : chi.values)
            r.push_back(v.to_string());
        rows.push_back(std::move(r));
    }
    if (opt.format == "csv") {
        print_csv(out, rows);
    } else {
        out << t.label << "  order " << t.order.get_str() << '\n';
        print_grid(out, rows);
    }
    return exit_ok;
}

int cmd_seq(const Options& opt, std::ostream& out)
{
    SequenceRecord rec;
    if (opt.seq_id == "a363701") {
        const std::uint64_t limit = opt.limit ? opt.limit : 30;
        if (limit > static_cast<std::uint64_t>(kZeroColumnCap))
            throw ResourceCapError("a363701 is capped at " + std::to_string(kZeroColumnCap));
        rec = seq_zero_columns_sn(static_cast<int>(limit), kZeroColumnCap);
    } else {
        const std::uint64_t limit = opt.limit ? opt.limit : (opt.seq_id == "a363675" ? 200 : 60);
        if (limit > kCriterionSequenceCap)
            throw ResourceCapError(opt.seq_id + " is capped at " + std::to_string(kCriterionSequenceCap));
        rec = opt.seq_id == "a363675" ? seq_L_Sn(limit) : seq_L_An(limit);
    }
    if (opt.bfile) {
        for (std::size_t i = 0; i < rec.terms.size(); ++i)
            out << i + 1 << ' ' << rec.terms[i] << '\n';
    } else if (opt.format == "json") {
        Json j;
        j["id"] = rec.id;
        j["limit"] = rec.limit;
        j["terms"] = rec.terms;
        out << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        out << "index,term\n";
        for (std::size_t i = 0; i < rec.terms.size(); ++i)
            out << i + 1 << ',' << rec.terms[i] << '\n';
    } else {
        for (auto t : rec.terms)
            out << t << '\n';
    }
    return exit_ok;
}

std::string column_status(const ColumnCheck& c)
{
    if (c.vacuous)
        return "vacuous";
    if (c.verified)
        return "verified";
    if (!c.instantiable)
        return "coefficient not an integer";
    std::string s = "fails for " + c.failing_character + ", discrepancy [";
    for (std::size_t i = 0; i < c.discrepancy.size(); ++i)
        s += (i ? ", " : "") + c.discrepancy[i].get_str();
    return s + "]";
}

int cmd_knutson(const Options& opt, std::ostream& out, std::ostream& err)
{
    const GroupSpec spec = parse_group(opt.family, opt.n);
    CharacterRing ring(load_table(spec, opt, err));
    const CharacterTable& t = ring.table();

    std::optional<std::size_t> only;
    if (!opt.character.empty()) {
        only = t.find_irreducible(opt.character);
        if (!only)
            throw PreconditionError("no irreducible labelled '" + opt.character + "' in " + t.label);
    }
    const bool sl2_odd = spec.family == GroupFamily::sl2 && spec.n % 2 == 1 && spec.n >= 5;
    std::optional<VirtualCharacter> rho;
    if (opt.rho == "theorem") {
        if (!sl2_odd)
            throw PreconditionError("--rho theorem applies to SL2(q) with odd q >= 5");
        rho = rho_theorem_character(ring, make_sl2_param(spec.n));
    } else if (opt.rho_given || only) {
        rho = regular_character(ring.table_ptr());
    }

    const KnutsonSummary s = summarize_knutson(spec, ring);
    std::optional<RhoInverseReport> table_report;
    if (sl2_odd)
        table_report = verify_rho_inverses(ring, make_sl2_param(spec.n), opt.search_corrections);

    std::vector<std::optional<VirtualCharacter>> inverses(t.num_irreducibles());
    if (rho)
        for (std::size_t i = 0; i < t.num_irreducibles(); ++i)
            if (!only || *only == i)
                inverses[i] = is_rho_invertible(ring, i, *rho);

    if (opt.format == "json") {
        Json j;
        j["group"] = s.group;
        j["order"] = to_json(s.order);
        j["L"] = to_json(s.L);
        j["lower_bound"] = rational_json(s.lower_bound);
        j["zero_columns"] = s.zero_columns;
        Json chars = Json::array();
        for (std::size_t i = 0; i < s.characters.size(); ++i) {
            if (only && *only != i)
                continue;
            Json c{{"label", s.characters[i].label},
                   {"degree", to_json(s.characters[i].degree)},
                   {"index", to_json(s.characters[i].index)}};
            if (rho)
                c["inverse"] = inverses[i] ? Json(inverses[i]->to_string()) : Json(nullptr);
            chars.push_back(c);
        }
        j["characters"] = chars;
        j["K"] = to_json(s.K);
        j["k_prime"] = s.k_prime ? rational_json(*s.k_prime) : Json(nullptr);
        j["k_prime_reason"] = s.k_prime_reason;
        if (table_report) {
            Json tr;
            tr["column"] = table_report->selected_column ? Json(*table_report->selected_column + 1) : Json(nullptr);
            Json rows = Json::array();
            for (const auto& r : table_report->rows) {
                Json row{{"row", r.name}};
                Json cols = Json::array();
                for (const auto& c : r.columns)
                    cols.push_back(column_status(c));
                row["columns"] = cols;
                if (r.correction)
                    row["correction"] = {{"replaced", r.correction->replaced_term},
                                         {"by", r.correction->replacement},
                                         {"inverse", r.correction->inverse.to_string()}};
                rows.push_back(row);
            }
            tr["rows"] = rows;
            tr["verified"] = table_report->all_verified_or_corrected();
            j["rho_inverse_table"] = tr;
        }
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows{{"character", "degree", "index"}};
        if (rho)
            rows[0].push_back(opt.rho == "theorem" ? "theorem-rho inverse" : "regular inverse");
        for (std::size_t i = 0; i < s.characters.size(); ++i) {
            if (only && *only != i)
                continue;
            rows.push_back({s.characters[i].label, s.characters[i].degree.get_str(), s.characters[i].index.get_str()});
            if (rho)
                rows.back().push_back(inverses[i] ? inverses[i]->to_string() : "none");
        }
        if (opt.format == "csv") {
            print_csv(out, rows);
        } else {
            out << "group: " << s.group << '\n'
                << "order: " << s.order.get_str() << '\n'
                << "L: " << s.L.get_str() << '\n'
                << "lower bound L/|G|: " << to_string(s.lower_bound) << '\n'
                << "zero in every non-trivial column: " << (s.zero_columns ? "yes" : "no") << '\n';
            print_grid(out, rows);
            out << "K: " << s.K.get_str() << '\n'
                << "K': " << (s.k_prime ? to_string(*s.k_prime) : "?") << " (" << s.k_prime_reason << ")\n";
            if (table_report) {
                out << "rho-inverse table: ";
                if (table_report->selected_column)
                    out << "column " << *table_report->selected_column + 1 << " verifies for q = " << spec.n % 4
                        << " mod 4\n";
                else
                    out << "no column verifies\n";
                for (const auto& r : table_report->rows) {
                    out << "  " << r.name << ": column 1 " << column_status(r.columns[0]) << "; column 2 "
                        << column_status(r.columns[1]) << '\n';
                    if (r.correction)
                        out << "    correction: " << r.correction->replaced_term << " -> " << r.correction->replacement
                            << '\n';
                }
            }
        }
    }
    if (table_report && !table_report->all_verified_or_corrected())
        return exit_table_discrepancy;
    return exit_ok;
}

int cmd_verify(const Options& opt, std::ostream& out)
{
    const SuiteReport rep = run_suite(opt.suite, opt.q_given ? std::optional<int>(opt.q) : std::nullopt);
    if (opt.format_given && opt.format == "text") {
        for (const auto& c : rep.checks)
            out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  " << c.detail << '\n';
        out << (rep.pass() ? "suite passed" : "suite failed") << '\n';
    } else {
        Json j;
        j["suite"] = rep.suite;
        j["pass"] = rep.pass();
        Json checks = Json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["checks"] = checks;
        out << j.dump(2) << '\n';
    }
    return rep.pass() ? exit_ok : exit_verification_failed;
}

int cmd_cores(const Options& opt, std::ostream& out)
{
    if (opt.n < 0 || opt.t < 2)
        throw PreconditionError("cores needs n >= 0 and t >= 2");
    const CoreMethod method = opt.brute_force ? CoreMethod::brute_force : CoreMethod::automatic;
    const bool exists = exists_t_core(opt.n, opt.t, method);
    if (opt.list && opt.n > kCoreCountCap)
        throw ResourceCapError("listing cores is capped at n = " + std::to_string(kCoreCountCap));
    std::optional<Partition> witness;
    std::optional<std::uint64_t> count;
    std::vector<Partition> all;
    if (!opt.brute_force || opt.n <= kCoreCountCap)
        count = count_t_cores(opt.n, opt.t, method);
    if (opt.n <= kCoreCountCap) {
        witness = find_t_core(opt.n, opt.t);
        if (opt.list)
            all = t_cores(opt.n, opt.t);
    }
    if (opt.format == "json") {
        Json j{{"n", opt.n}, {"t", opt.t}, {"exists", exists}};
        j["count"] = count ? Json(*count) : Json(nullptr);
        j["witness"] = witness ? Json(witness->to_string()) : Json(nullptr);
        if (opt.list) {
            Json list = Json::array();
            for (const auto& p : all)
                list.push_back(p.to_string());
            j["cores"] = list;
        }
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    if (opt.format == "csv") {
        out << "n,t,exists,count,witness\n"
            << opt.n << ',' << opt.t << ',' << (exists ? "true" : "false") << ','
            << (count ? std::to_string(*count) : "") << ',' << csv_field(witness ? witness->to_string() : "") << '\n';
        return exit_ok;
    }
    out << "n: " << opt.n << "\nt: " << opt.t << "\nexists: " << (exists ? "yes" : "no") << '\n';
    if (count)
        out << "count: " << *count << '\n';
    if (witness)
        out << "witness: " << witness->to_string() << '\n';
    for (const auto& p : all)
        out << p.to_string() << '\n';
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Exact character tables, Knutson indices and the related integer sequences", "knutson"};
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"text", "json", "csv"});
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(formats);
    };
    auto add_group = [&](CLI::App* sub) {
        sub->add_option("group", opt.family, "sn, an, sl2 or psl2")->required()->check(
            CLI::IsMember({"sn", "an", "sl2", "psl2"}));
        sub->add_option("n", opt.n, "Degree n or field size q")->required();
        sub->add_flag("--no-cache", opt.no_cache, "Do not read or write the table cache");
    };

    auto* table = app.add_subcommand("table", "Print a character table");
    add_group(table);
    add_format(table);

    auto* seq = app.add_subcommand("seq", "Print terms of a363675, a363676 or a363701");
    seq->add_option("id", opt.seq_id)->required()->check(CLI::IsMember({"a363675", "a363676", "a363701"}));
    seq->add_option("--limit", opt.limit, "Largest n considered");
    seq->add_flag("--bfile", opt.bfile, "Emit b-file lines 'index term'");
    add_format(seq);

    auto* knut = app.add_subcommand("knutson", "Knutson indices, L(G) and generalised-index bounds");
    add_group(knut);
    knut->add_option("--char", opt.character, "Restrict the per-character report to one label");
    knut->add_option("--rho", opt.rho, "Invert against the regular or the theorem character")
        ->check(CLI::IsMember({"regular", "theorem"}));
    knut->add_flag("--search-corrections", opt.search_corrections,
                   "Search single-term corrections for rho-inverse rows that fail");
    add_format(knut);

    auto* verify = app.add_subcommand("verify", "Run a verification suite and report JSON");
    verify->add_option("suite", opt.suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--q", opt.q, "Single odd q for sl2-rho");
    add_format(verify);

    auto* cores = app.add_subcommand("cores", "t-core partitions of n");
    cores->add_option("n", opt.n)->required();
    cores->add_option("t", opt.t)->required();
    cores->add_flag("--list", opt.list, "List every t-core");
    cores->add_flag("--brute-force", opt.brute_force, "Decide existence by enumeration only");
    add_format(cores);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    for (auto* sub : {table, seq, knut, verify, cores})
        if (sub->parsed() && sub->get_option("--format")->count() > 0)
            opt.format_given = true;
    opt.rho_given = knut->get_option("--rho")->count() > 0;
    opt.q_given = verify->get_option("--q")->count() > 0;

    try {
        if (table->parsed())
            return cmd_table(opt, out, err);
        if (seq->parsed())
            return cmd_seq(opt, out);
        if (knut->parsed())
            return cmd_knutson(opt, out, err);
        if (verify->parsed())
            return cmd_verify(opt, out);
        return cmd_cores(opt, out);
    } catch (const ResourceCapError& e) {
        err << "error: " << e.what() << '\n';
        return exit_resource_cap;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_verification_failed;
    }
}

} // namespace knutson
