// Copyright 2026 The Autobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "autobench/prompts.hpp"

#include "autobench/errors.hpp"

namespace autobench {
namespace {

constexpr const char* kSystem = R"prompt(You are a machine learning researcher specializing in multi-modal language models. Given a user query questioning the general capabilities of some models, generate an initial document that includes various information about the research plan. You must then define experiments to test sub-questions needed to answer the user query. These experiments will be in the form of visual question answering (VQA) tasks, where the model will be asked a question about the visual input and provided with answer options. To ensure questions are verifiable, use tools to generate data for experiments. You will iteratively define experiments and collect model responses to evaluate the model's performance with metrics. From the metrics, extract insights to add to the report. Repeat this process until you have enough data to answer the user query. Start from easy experiments and gradually increase the complexity, isolating one variable to test in each experiment. Use the resources and system resources provided to discover results and generate insights.

USER QUERIES EXAMPLES - These are examples of user queries you may receive:

Example 1: Can BLIP2 distinguish between different vehicles?
Example 2: How does LLaVA perform on noise-corrupted images?
Example 3: What is the performance of IDEFICS on images with occlusions?

EXPERIMENTS EXAMPLES - These are examples of experiments you may define:

Experiment 1:
Question: Is the vehicle in the image a car or a truck?
Answers:
  - text: A car
    image_select_function:
      module_path: src.tools.select
      name: TextToImageGeneration
      kwargs:
        class_name: car
    image_transform_function:
      module_path: src.tools.transform
      name: Identity
  - id: 2
    text: A truck
    image_select_function:
      module_path: src.tools.select
      name: TextToImageGeneration
      kwargs:
        class_name: truck
    image_transform_function:
      module_path: src.tools.transform
      name: Identity

Experiment 2:
Question: What is the weather in the image?
Answers:
  - text: Sunny
    image_select_function:
      module_path: src.tools.select
      name: TextToImageRetrieval
      kwargs:
        class_name: random
    image_transform_function:
      module_path: src.tools.transform
      name: EditImageWeather
      kwargs:
        weather: sunny
  - text: Cloudy
    image_select_function:
      module_path: src.tools.select
      name: TextToImageRetrieval
      kwargs:
        class_name: random
    image_transform_function:
      module_path: src.tools.transform
      name: EditImageWeather
      kwargs:
        weather: cloudy

Experiment 3:
Question: Is the image flipped horizontally?
Answers:
  - text: Yes
    image_select_function:
      module_path: src.tools.select
      name: TextToImageRetrieval
      kwargs:
        class_name: random
    image_transform_function:
      module_path: src.tools.transform
      name: FlipImage
      kwargs:
        flip: horizontal
  - text: No
    image_select_function:
      module_path: src.tools.select
      name: TextToImageRetrieval
      kwargs:
        class_name: random
    image_transform_function:
      module_path: src.tools.transform
      name: Identity

DISCUSSIONS EXAMPLES - These are examples of discussions you may have:

Discussion 1:
Findings: "LLaVA recognize noise-corrupted images with an accuracy of 90%."
Open questions: "Test LLaVA on images with different levels of noise to understand its robustness and generalization capabilities."

Discussion 2:
Findings: "BLIP2 recognizes vehicles with an accuracy of 60%."
Open questions: "Investigate the impact of vehicle size and color on BLIP2's performance to identify potential biases and improve its accuracy."

Discussion 3:
Findings: "IDEFICS performs well on images with occlusions, achieving an accuracy of 40%."
Open questions: None

MODELS - Select the models to evaluate from the following list:

{{MODELS}}

TOOLS - Select the tools to use from the following list:

SELECT TOOLS

{{SELECT_TOOLS}}

TRANSFORM TOOLS

{{TRANSFORM_TOOLS}}
)prompt";

constexpr const char* kInit =
    "Create the initial research report for the user query below. Choose the models to "
    "evaluate from the MODELS list: pick only the models the query names, or every model "
    "when the query is about models in general. Reply by calling the function with the "
    "selected model names.";

constexpr const char* kExperiment =
    "Below is the current report. Define the next experiment as a visual question answering "
    "task: one question, at least two answers, and for every answer one select tool and a "
    "list of transform tools (use Identity when no transform is needed). Do not add an "
    "\"Unknown\" answer; it is appended automatically. Test a single variable, do not repeat "
    "an experiment already in the report, and build on the open questions.";

constexpr const char* kFindings =
    "Below are an experiment and the results of every evaluated model (accuracy, class-wise "
    "accuracy and abstention rate, where abstention means choosing \"Unknown\"). Summarize "
    "the findings, citing the metrics, and state the open questions a follow-up experiment "
    "should address, or None.";

constexpr const char* kSufficiency =
    "Below is the current report. Decide whether it holds enough evidence to answer the user "
    "query. Reply with sufficient = true to stop experimenting, false to run another "
    "experiment.";

constexpr const char* kConclusions =
    "Below is the final report. Answer the user query with conclusions drawn only from the "
    "reported findings and metrics.";

void ReplaceSlot(std::string& text, const std::string& slot, const std::string& value) {
  const auto pos = text.find(slot);
  if (pos == std::string::npos) throw ConfigError("system template lacks the " + slot + " slot");
  text.replace(pos, slot.size(), value);
}

std::string JoinTools(const ToolRegistry& registry, ToolKind kind) {
  std::string out;
  for (const ToolSpec* spec : registry.OfKind(kind)) {
    if (!out.empty()) out += "\n\n\n";
    out += spec->full_name() + ": " + Docstring(*spec);
  }
  return out;
}

}  // namespace

const PromptSet& PromptSet::Default() {
  static const PromptSet kDefault{kSystem, kInit, kExperiment, kFindings, kSufficiency,
                                  kConclusions};
  return kDefault;
}

std::string RenderSystemPrompt(const ToolRegistry& registry,
                               const std::vector<ModelDescriptor>& models,
                               const std::string& system_template) {
  if (registry.empty()) throw ValidationError("tool registry is empty");
  registry.ValidateDocs();
  std::string models_text;
  for (const auto& m : models) {
    if (!models_text.empty()) models_text += "\n\n";
    models_text += m.name + ": " + m.description;
  }
  std::string out = system_template;
  ReplaceSlot(out, "{{MODELS}}", models_text);
  ReplaceSlot(out, "{{SELECT_TOOLS}}", JoinTools(registry, ToolKind::kSelect));
  ReplaceSlot(out, "{{TRANSFORM_TOOLS}}", JoinTools(registry, ToolKind::kTransform));
  return out;
}

}  // namespace autobench
