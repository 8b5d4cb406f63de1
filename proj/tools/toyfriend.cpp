#include <iostream>

#include "CLI11.hpp"
#include "toyfriend/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact epistemic toy-model simulator of the Wigner's-friend protocol"};
  app.require_subcommand(1);

  toyfriend::RunOptions run_options;
  std::string step;
  CLI::App* run = app.add_subcommand("run", "Run the protocol and print every step and verdict");
  run->add_option("--format", run_options.format, "Output format: human or json")
      ->check(CLI::IsMember({"human", "json"}));
  run->add_option("--step", step, "Print only the step with this label (or unique prefix)");

  toyfriend::SimulateOptions simulate_options;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Simulate a circuit file's terminal measurement");
  simulate->add_option("file", simulate_options.file, "Circuit DSL file")->required();
  simulate->add_option("--model", simulate_options.model, "toy, quantum, or both")
      ->check(CLI::IsMember({"toy", "quantum", "both"}));
  simulate->add_flag("--require-match", simulate_options.require_match,
                     "Exit nonzero when toy and quantum distributions disagree");

  toyfriend::CompareOptions compare_options;
  CLI::App* compare =
      app.add_subcommand("compare", "Compare toy and quantum outcomes over random circuits");
  compare->add_option("--seed", compare_options.seed, "Random seed");
  compare->add_option("--count", compare_options.count, "Number of random circuits");
  compare->add_option("--qubits", compare_options.qubits, "Maximum qubit count (1-3)");
  compare->add_option("--depth", compare_options.depth, "Maximum gate depth (0-8)");
  compare->add_option("--include", compare_options.include_file,
                      "Also compare the circuit in this file");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    if (!step.empty()) {
      run_options.step = step;
    }
    return toyfriend::cmd_run(run_options, std::cout, std::cerr);
  }
  if (simulate->parsed()) {
    return toyfriend::cmd_simulate(simulate_options, std::cout, std::cerr);
  }
  return toyfriend::cmd_compare(compare_options, std::cout, std::cerr);
}
