#include "cli.h"

#include <fstream>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "report.h"
#include "shapegeo/io.h"

namespace shapegeo::cli {
namespace {

using report::Json;

struct Options {
  std::vector<std::string> files;
  bool naive = false;
};

// A malformed input file or argument.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  Shape load(const std::string& path) {
    ParsedShape parsed;
    try {
      parsed = load_shape_file(path);
    } catch (const ShapeParseError& e) {
      throw InputError(path + ": " + e.what());
    }
    for (const std::string& d : parsed.diagnostics) err_ << path << ": " << d << '\n';
    Json diag = Json::array();
    for (const std::string& d : parsed.diagnostics) diag.push_back(d);
    diagnostics_[path] = diag;
    return parsed.shape;
  }

  void emit(Json doc) {
    if (!diagnostics_.empty()) {
      doc["diagnostics"] = Json::object();
      for (const auto& [path, d] : diagnostics_) doc["diagnostics"][path] = d;
    }
    out_ << doc.dump(2) << '\n';
  }

  std::ostream& out() { return out_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::map<std::string, Json> diagnostics_;
};

Json base(const std::string& command, const Shape& s) {
  return {{"command", command}, {"shape", report::shape_json(s)}};
}

void cmd_reduce(Session& session, const Options& opt) {
  Shape s = session.load(opt.files[0]);
  session.emit(base("reduce", s));
}

void cmd_arrangement(Session& session, const Options& opt) {
  Shape s = session.load(opt.files[0]);
  Arrangement a = arrangement_of(s);
  Json doc = base("arrangement", s);
  doc["arrangement"] = report::arrangement_json(a);
  doc["axiom_report"] = report::axiom_report_json(validate(a.as_raw()));
  session.emit(doc);
}

void cmd_incidence(Session& session, const Options& opt) {
  Shape s = session.load(opt.files[0]);
  Arrangement a = arrangement_of(s);
  Json doc = base("incidence", s);
  doc["arrangement"] = report::arrangement_json(a);
  doc["incidence"] = report::incidence_json(incidence_of(a), a.as_raw());
  session.emit(doc);
}

void cmd_classify(Session& session, const Options& opt) {
  Shape s = session.load(opt.files[0]);
  Arrangement a = arrangement_of(s);
  IncidenceStructure inc = incidence_of(a);
  Json doc = base("classify", s);
  doc["arrangement"] = report::arrangement_json(a);
  doc["incidence"] = report::incidence_json(inc, a.as_raw());
  doc["geometry_checks"] = report::geometry_checks_json(inc);
  doc["geometry_class"] = to_string(classify(inc));
  session.emit(doc);
}

void cmd_determinate(Session& session, const Options& opt) {
  Shape s = session.load(opt.files[0]);
  Json doc = base("determinate", s);
  doc["arrangement"] = report::arrangement_json(arrangement_of(s));
  doc["determinacy"] = report::determinacy_json(classify_rule(s));
  session.emit(doc);
}

using ShapeOp = Shape (*)(const Shape&, const Shape&);
using NaiveOp = RawPointLineSet (*)(const Arrangement&, const Arrangement&);

void cmd_binary(Session& session, const Options& opt, const std::string& name, ShapeOp op,
                NaiveOp naive_op) {
  Shape s1 = session.load(opt.files[0]);
  Shape s2 = session.load(opt.files[1]);
  Shape result = op(s1, s2);
  Arrangement definitional = arrangement_of(result);
  Json doc = {{"command", name},
              {"operands", Json::array({report::shape_json(s1), report::shape_json(s2)})},
              {"shape", report::shape_json(result)},
              {"arrangement", report::arrangement_json(definitional)},
              {"axiom_report", report::axiom_report_json(validate(definitional.as_raw()))}};
  if (opt.naive) {
    RawPointLineSet naive = naive_op(arrangement_of(s1), arrangement_of(s2));
    doc["naive"] = {{"raw", report::raw_set_json(naive)},
                    {"axiom_report", report::axiom_report_json(validate(naive))},
                    {"matches_definitional", naive == definitional.as_raw()}};
  }
  session.emit(doc);
}

void cmd_validate(Session& session, const Options& opt) {
  std::ifstream in(opt.files[0]);
  if (!in) throw InputError("cannot read '" + opt.files[0] + "'");
  RawPointLineSet raw;
  try {
    raw = report::parse_raw_set(in);
  } catch (const report::RawSetError& e) {
    throw InputError(opt.files[0] + ": " + e.what());
  }
  IncidenceStructure inc = incidence_of(raw);
  Json doc = {{"command", "validate"},
              {"raw", report::raw_set_json(raw)},
              {"axiom_report", report::axiom_report_json(validate(raw))},
              {"incidence", report::incidence_json(inc, raw)},
              {"geometry_checks", report::geometry_checks_json(inc)},
              {"geometry_class", to_string(classify(inc))}};
  session.emit(doc);
}

void cmd_render(Session& session, const Options& opt) {
  Shape s = session.load(opt.files[0]);
  session.out() << render_svg(s, arrangement_of(s));
}

void cmd_levi(Session& session, const Options& opt) {
  Shape s = session.load(opt.files[0]);
  session.out() << emit_dot(incidence_of(arrangement_of(s)));
}

struct Command {
  const char* name;
  const char* help;
  int arity;
  bool has_naive;
  std::function<void(Session&, const Options&)> run;
};

std::vector<Command> commands() {
  return {
      {"reduce", "Reduce a shape file to maximal segments", 1, false, cmd_reduce},
      {"sum", "Sum of two shapes and its arrangement", 2, true,
       [](Session& s, const Options& o) { cmd_binary(s, o, "sum", sum, naive_union); }},
      {"diff", "Difference of two shapes and its arrangement", 2, true,
       [](Session& s, const Options& o) {
         cmd_binary(s, o, "diff", difference, naive_difference);
       }},
      {"product", "Product of two shapes and its arrangement", 2, true,
       [](Session& s, const Options& o) {
         cmd_binary(s, o, "product", product, naive_intersection);
       }},
      {"arrangement", "Registration marks and construction lines of a shape", 1, false,
       cmd_arrangement},
      {"incidence", "Labeled incidence structure of a shape's arrangement", 1, false,
       cmd_incidence},
      {"classify", "Classify the arrangement as a finite geometry", 1, false, cmd_classify},
      {"determinate", "Decide whether the shape gives a determinate rule", 1, false,
       cmd_determinate},
      {"validate", "Check a raw JSON point/line set against the arrangement axioms", 1, false,
       cmd_validate},
      {"render", "Render shape and arrangement as SVG", 1, false, cmd_render},
      {"levi", "Levi graph of the incidence structure as Graphviz DOT", 1, false, cmd_levi},
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shapes, their arrangements, and the finite geometries they form", "shapegeo"};
  app.require_subcommand(1, 1);

  std::vector<Command> table = commands();
  std::vector<Options> options(table.size());
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < table.size(); ++i) {
    CLI::App* sub = app.add_subcommand(table[i].name, table[i].help);
    const char* what = table[i].name == std::string("validate") ? "JSON point/line set" : "shape file";
    sub->add_option("files", options[i].files, table[i].arity == 2 ? "Two shape files" : what)
        ->required()
        ->expected(table[i].arity);
    if (table[i].has_naive) {
      sub->add_flag("--naive", options[i].naive,
                    "Also apply the component-wise set operation to the two arrangements");
    }
    subs.push_back(sub);
  }

  std::vector<const char*> argv{"shapegeo"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "shapegeo: " << e.what() << "\n\n" << app.help();
    return kInvalidInput;
  }

  try {
    Session session(out, err);
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (subs[i]->parsed()) table[i].run(session, options[i]);
    }
  } catch (const InputError& e) {
    err << "shapegeo: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "shapegeo: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace shapegeo::cli
