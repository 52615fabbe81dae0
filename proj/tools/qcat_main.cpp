// Command-line front end: validate instance files, compute way-below and
// continuity reports, inspect topological instances, and run the law suite.
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qcat/instance.hpp"
#include "qcat/laws.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitLawFailure = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
  bool json = false;
  int cap = 0;  // 0 keeps the defaults
  std::string ideals = "all";
  std::string fsw_below = "totally";
};

qcat::Limits make_limits(const CommonOpts& o) {
  qcat::Limits limits;
  if (o.cap > 0) {
    limits.max_maps = static_cast<std::size_t>(o.cap);
    limits.max_members = static_cast<std::size_t>(o.cap);
  }
  return limits;
}

qcat::IdealClass make_class(const CommonOpts& o) {
  qcat::BelowFlavor flavor = o.fsw_below == "directed" ? qcat::BelowFlavor::Directed
                                                       : qcat::BelowFlavor::Totally;
  return qcat::parse_ideal_class(o.ideals, flavor);
}

// categories are taken by name, defaulting to the only/first one
const qcat::VCategory* pick_category(const qcat::InstanceFile& file,
                                     const std::string& name) {
  if (!name.empty()) {
    const auto* c = file.find_category(name);
    if (!c) throw qcat::structural_error("no category named '" + name + "' in the file");
    return &c->cat;
  }
  if (file.categories.empty())
    throw qcat::structural_error("the instance file contains no categories");
  return &file.categories.front().cat;
}

const qcat::FinTop* pick_space(const qcat::InstanceFile& file, const std::string& name) {
  if (!name.empty()) {
    const auto* s = file.find_space(name);
    if (!s) throw qcat::structural_error("no space named '" + name + "' in the file");
    return &s->space;
  }
  if (file.spaces.empty())
    throw qcat::structural_error("the instance file contains no spaces");
  return &file.spaces.front().space;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const qcat::resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const qcat::schema_error& e) {
    std::cerr << "schema error at " << (e.pointer.empty() ? "/" : e.pointer) << ": "
              << e.what() << "\n";
    return kExitValidation;
  } catch (const qcat::structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quantale-enriched categories: approximation toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string file_path, category_name, space_name, distributor_name;

  auto add_common = [&](CLI::App* cmd, bool with_class) {
    cmd->add_flag("--json", opts.json, "emit the report as JSON");
    cmd->add_option("--cap", opts.cap, "enumeration cap override");
    if (with_class) {
      cmd->add_option("--ideals", opts.ideals,
                      "ideal class: all|order|fsw|radj|custom:<name>");
      cmd->add_option("--fsw-below", opts.fsw_below,
                      "approximation flavour for fsw: totally|directed");
    }
  };

  CLI::App* validate = app.add_subcommand("validate", "run every validator in a file");
  validate->add_option("file", file_path)->required();
  add_common(validate, false);

  CLI::App* waybelow = app.add_subcommand("waybelow", "way-below matrix of a category");
  waybelow->add_option("file", file_path)->required();
  waybelow->add_option("--category", category_name);
  add_common(waybelow, true);

  CLI::App* continuity = app.add_subcommand("continuity", "continuity verdict and report");
  continuity->add_option("file", file_path)->required();
  continuity->add_option("--category", category_name);
  continuity->add_option("--distributor", distributor_name,
                         "also evaluate the condition vector of this distributor");
  add_common(continuity, true);

  CLI::App* cocomplete = app.add_subcommand("cocomplete", "suprema of all class ideals");
  cocomplete->add_option("file", file_path)->required();
  cocomplete->add_option("--category", category_name);
  add_common(cocomplete, true);

  CLI::App* topo = app.add_subcommand("topo", "filter-space reports for a finite space");
  topo->add_option("file", file_path)->required();
  topo->add_option("--space", space_name);
  add_common(topo, true);

  CLI::App* laws = app.add_subcommand("laws", "run the law suite");
  std::string selection, tier = "all";
  uint64_t seed = 0;
  int count = 100;
  laws->add_option("--select", selection, "substring filter on law ids");
  laws->add_option("--seed", seed);
  laws->add_option("--count", count);
  laws->add_option("--tier", tier, "theorem|observation|all");
  add_common(laws, false);

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed())
    return guarded([&] {
      qcat::InstanceFile file = qcat::parse_instance_file(file_path);
      std::cout << (opts.json ? qcat::render_validation_json(file)
                              : qcat::render_validation_text(file));
      return file.all_valid() ? kExitOk : kExitValidation;
    });

  auto with_valid_file = [&](const std::function<int(const qcat::InstanceFile&)>& body) {
    return guarded([&] {
      qcat::InstanceFile file = qcat::parse_instance_file(file_path);
      if (!file.all_valid()) {
        std::cerr << qcat::render_validation_text(file);
        return kExitValidation;
      }
      return body(file);
    });
  };

  if (waybelow->parsed())
    return with_valid_file([&](const qcat::InstanceFile& file) {
      auto render = qcat::render_waybelow(*pick_category(file, category_name),
                                          make_class(opts), make_limits(opts));
      std::cout << (opts.json ? render.json : render.text);
      return kExitOk;
    });

  if (continuity->parsed())
    return with_valid_file([&](const qcat::InstanceFile& file) {
      std::optional<qcat::Distributor> probe;
      if (!distributor_name.empty()) {
        const auto* d = file.find_distributor(distributor_name);
        if (!d)
          throw qcat::structural_error("no distributor named '" + distributor_name + "'");
        probe = d->dist;
      }
      auto render = qcat::render_continuity(*pick_category(file, category_name),
                                            make_class(opts), probe, make_limits(opts));
      std::cout << (opts.json ? render.json : render.text);
      return kExitOk;
    });

  if (cocomplete->parsed())
    return with_valid_file([&](const qcat::InstanceFile& file) {
      auto render = qcat::render_cocomplete(*pick_category(file, category_name),
                                            make_class(opts), make_limits(opts));
      std::cout << (opts.json ? render.json : render.text);
      return kExitOk;
    });

  if (topo->parsed())
    return with_valid_file([&](const qcat::InstanceFile& file) {
      qcat::FilterClass cls;
      if (opts.ideals == "all")
        cls = qcat::FilterClass::All;
      else if (opts.ideals == "proper")
        cls = qcat::FilterClass::Proper;
      else
        throw qcat::structural_error("topo classes: all|proper");
      auto render = qcat::render_topo(*pick_space(file, space_name), cls, make_limits(opts));
      std::cout << (opts.json ? render.json : render.text);
      return kExitOk;
    });

  if (laws->parsed())
    return guarded([&] {
      qcat::LawRunConfig cfg;
      cfg.selection = selection;
      cfg.seed = seed;
      cfg.count = count;
      cfg.limits = make_limits(opts);
      if (tier == "theorem")
        cfg.tier = qcat::Tier::Theorem;
      else if (tier == "observation")
        cfg.tier = qcat::Tier::Observation;
      else if (tier != "all")
        throw qcat::structural_error("tiers: theorem|observation|all");
      qcat::LawReport report = qcat::run_laws(cfg);
      std::cout << (opts.json ? qcat::law_report_json(report)
                              : qcat::law_report_text(report));
      return report.theorem_failures == 0 ? kExitOk : kExitLawFailure;
    });

  return kExitOk;
}
