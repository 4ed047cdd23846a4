// raagkit: command line front end for the raag core library.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant failure.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>

#include "raag/analysis.hpp"
#include "raag/autos.hpp"
#include "raag/error.hpp"
#include "raag/graph.hpp"
#include "raag/homs.hpp"
#include "raag/word.hpp"

namespace {

using raag::DefiningGraph;

void print_image(const DefiningGraph& g, const raag::HomImage& image) {
  std::cout << "target: " << g.format(image.target.span) << "\n";
  std::cout << "image: " << raag::format_autword(image.target.graph, image.word) << "\n";
  std::cout << "inner: " << (raag::is_inner(image.target.graph, image.word) ? "yes" : "no")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure of outer automorphism groups of right-angled Artin groups"};
  app.require_subcommand(1);

  std::string graph_file;
  std::string word_text;
  std::string aut_text;
  std::string class_rep;
  bool json = false;

  std::function<void()> action;

  auto* analyze = app.add_subcommand("analyze", "Full structural report");
  analyze->add_option("graphfile", graph_file)->required();
  analyze->add_flag("--json", json, "Structured output");
  analyze->callback([&] {
    action = [&] {
      const auto r = raag::report(raag::load_graph(graph_file));
      if (json) {
        std::cout << raag::report_json(r).dump(2) << "\n";
      } else {
        std::cout << raag::format_report(r);
      }
    };
  });

  auto* nf = app.add_subcommand("nf", "Normal form of a word");
  nf->add_option("graphfile", graph_file)->required();
  nf->add_option("word", word_text)->required();
  nf->callback([&] {
    action = [&] {
      const auto g = raag::load_graph(graph_file);
      std::cout << raag::format_word(g, raag::normal_form(g, raag::parse_word(g, word_text)))
                << "\n";
    };
  });

  auto* apply = app.add_subcommand("apply", "Apply an automorphism word to a group word");
  apply->add_option("graphfile", graph_file)->required();
  apply->add_option("autword", aut_text)->required();
  apply->add_option("word", word_text)->required();
  apply->callback([&] {
    action = [&] {
      const auto g = raag::load_graph(graph_file);
      const auto f = raag::parse_autword(g, aut_text);
      std::cout << raag::format_word(g, raag::apply(g, f, raag::parse_word(g, word_text)))
                << "\n";
    };
  });

  using HomFn = raag::HomImage (*)(const DefiningGraph&, raag::VertexSet, const raag::AutWord&);
  auto add_hom = [&](const char* name, const char* help, HomFn fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graphfile", graph_file)->required();
    sub->add_option("class-representative", class_rep)->required();
    sub->add_option("autword", aut_text)->required();
    sub->callback([&, fn] {
      action = [&, fn] {
        const auto g = raag::load_graph(graph_file);
        const auto cls = raag::maximal_class_of(g, g.index(class_rep));
        print_image(g, fn(g, cls, raag::parse_autword(g, aut_text)));
      };
    });
  };
  add_hom("restrict", "Restriction to the star of a maximal class", &raag::restrict_to_star);
  add_hom("exclude", "Exclusion of a maximal class", &raag::exclude);
  add_hom("project", "Projection to the link of a maximal class", &raag::project);

  auto* in_kr = app.add_subcommand("in-kr", "Membership in the restriction kernel");
  in_kr->add_option("graphfile", graph_file)->required();
  in_kr->add_option("autword", aut_text)->required();
  in_kr->callback([&] {
    action = [&] {
      const auto g = raag::load_graph(graph_file);
      std::cout << (raag::in_kr(g, raag::parse_autword(g, aut_text)) ? "yes" : "no") << "\n";
    };
  });

  auto* certs = app.add_subcommand("certs", "Unitriangular subgroup certificates");
  certs->add_option("graphfile", graph_file)->required();
  certs->callback([&] {
    action = [&] {
      const auto g = raag::load_graph(graph_file);
      const auto found = raag::uk_certificates(g);
      if (found.empty()) std::cout << "none\n";
      for (const auto& c : found) std::cout << raag::format_certificate(g, c) << "\n";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    action();
  } catch (const raag::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const raag::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
