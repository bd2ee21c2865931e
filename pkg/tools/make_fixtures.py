"""Build every bundled data file under src/taco/data/: the corpus, lookup
tables, template registry, simulator specs, weak search labels, evaluation
datasets, and the trained model files.

Run from the repo root after any corpus or template change:

    python tools/make_fixtures.py
"""
from __future__ import annotations

import json
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tools"))
sys.path.insert(0, str(ROOT / "src"))

import corpus_data  # noqa: E402

from taco.ingest import load_corpus  # noqa: E402
from taco.model import COOKING, DIY  # noqa: E402
from taco.nlu.domain import train_domain_model  # noqa: E402
from taco.nlu.simulator import SimulatorSpec, simulate_training_data, split_templates  # noqa: E402
from taco.nlu.train import TrainConfig, train_intent_model  # noqa: E402
from taco.qa.classify import train_question_model  # noqa: E402
from taco.search import (  # noqa: E402
    RankerTrainConfig,
    WeakLabelEntry,
    WeakLabelSet,
    build_index,
    expand_query,
    retrieve,
    save_weak_labels,
    train_reranker,
)
from taco.text import tokenize  # noqa: E402

DATA = ROOT / "src" / "taco" / "data"
EVAL = DATA / "eval"
CONVS = ROOT / "tests" / "conversations"

SEED = 20240501


# --- corpus -------------------------------------------------------------------

def write_corpus() -> list[dict]:
    docs = []
    for (doc_id, title, rating, minutes, popularity, cuisine, diet,
         ingredients, steps, faqs) in corpus_data.RECIPES:
        docs.append({
            "id": doc_id, "title": title, "domain": "cooking",
            "rating": rating, "estimated_time": minutes, "popularity": popularity,
            "cuisine_tags": cuisine, "diet_tags": diet,
            "ingredients": [{"name": n, "quantity": q} for n, q in ingredients],
            "steps": steps, "faqs": [list(f) for f in faqs],
        })
    for (doc_id, title, rating, minutes, popularity, steps, faqs) in corpus_data.DIY_TASKS:
        docs.append({
            "id": doc_id, "title": title, "domain": "diy",
            "rating": rating, "estimated_time": minutes, "popularity": popularity,
            "steps": steps, "faqs": [list(f) for f in faqs],
        })
    # a couple of documents without optional metadata, to exercise the
    # degrade-gracefully paths
    docs[5].pop("rating")
    docs[5].pop("estimated_time")
    docs[40].pop("rating")
    (DATA / "corpus.json").write_text(json.dumps(docs, indent=1))
    return docs


SUBSTITUTIONS = {
    "butter": ["equal parts coconut oil", "margarine"],
    "condensed milk": ["evaporated milk simmered with sugar until thick"],
    "buttermilk": ["a cup of milk with a tablespoon of lemon juice, rested ten minutes"],
    "eggs": ["a quarter cup of unsweetened applesauce per egg in baking"],
    "baking powder": ["a quarter teaspoon baking soda plus half a teaspoon cream of tartar"],
    "baking soda": ["three times the amount of baking powder"],
    "sour cream": ["plain greek yogurt"],
    "heavy cream": ["three quarters milk blended with a quarter melted butter"],
    "milk": ["the same amount of oat or almond milk"],
    "brown sugar": ["white sugar with a teaspoon of molasses per cup"],
    "honey": ["maple syrup", "agave nectar"],
    "maple syrup": ["honey thinned with a splash of warm water"],
    "cornstarch": ["twice the amount of flour for thickening"],
    "flour": ["a one-to-one gluten-free flour blend"],
    "bread crumbs": ["crushed crackers", "rolled oats pulsed fine"],
    "garlic": ["an eighth teaspoon of garlic powder per clove"],
    "onion": ["a teaspoon of onion powder per small onion"],
    "shallots": ["mild yellow onion with a pinch of garlic"],
    "lemon juice": ["half the amount of white vinegar", "lime juice"],
    "lime juice": ["lemon juice"],
    "white vinegar": ["apple cider vinegar"],
    "soy sauce": ["tamari", "coconut aminos"],
    "fish sauce": ["soy sauce with a squeeze of lime"],
    "worcestershire sauce": ["soy sauce with a dash of vinegar and sugar"],
    "tomato sauce": ["tomato paste thinned with equal parts water"],
    "tomato paste": ["tomato sauce simmered until reduced by half"],
    "ricotta cheese": ["small-curd cottage cheese, drained"],
    "mascarpone": ["cream cheese beaten with a little heavy cream"],
    "cream cheese": ["thick strained greek yogurt"],
    "parmesan cheese": ["pecorino romano", "grana padano"],
    "mozzarella cheese": ["provolone", "monterey jack cheese"],
    "cheddar cheese": ["colby", "gouda"],
    "feta cheese": ["crumbled ricotta salata"],
    "yogurt": ["sour cream"],
    "vegetable oil": ["melted butter", "light olive oil"],
    "olive oil": ["vegetable oil"],
    "sesame oil": ["a neutral oil with a sprinkle of toasted sesame seeds"],
    "vanilla extract": ["an equal amount of maple syrup", "vanilla bean paste"],
    "cocoa powder": ["melted unsweetened chocolate, one ounce per three tablespoons"],
    "chocolate chips": ["a chopped chocolate bar"],
    "molasses": ["dark honey", "maple syrup"],
    "oats": ["quinoa flakes"],
    "rice": ["quinoa", "couscous"],
    "basil": ["fresh spinach with a pinch of dried oregano"],
    "cilantro": ["flat-leaf parsley with a squeeze of lime"],
    "parsley": ["chervil", "celery leaves"],
    "ginger": ["a quarter teaspoon ground ginger per tablespoon fresh"],
    "mayonnaise": ["plain greek yogurt"],
    "tahini": ["smooth peanut butter thinned with sesame oil"],
    "chickpeas": ["white cannellini beans"],
}

DANGEROUS = """\
# task requests the assistant must refuse outright
make explosives
build a bomb
make fireworks
make gunpowder
make a weapon
make a gun
make napalm
make poison
make chloroform
mix bleach and ammonia
hotwire a car
disable a smoke detector
bypass a circuit breaker
make moonshine
tamper with a gas meter
"""

PROFESSIONAL = """\
# tasks needing a licensed professional; redirect politely
file a lawsuit
write a will
file for divorce
file taxes
invest in stocks
pick stocks
treat an infection
stitch a wound
prescribe medication
diagnose an illness
pull a tooth
fill a cavity
rewire an electrical panel
replace a breaker panel
install a gas line
remove asbestos
treat depression
set a broken bone
"""

PROFANITY = """\
# screened in both user input and system output
shit
bullshit
fuck
fucking
fucked
bitch
bastard
asshole
damn
dammit
goddamn
dumbass
jackass
piss off
go to hell
"""

ASR_RULES = """\
# wrong,right,phases ('|'-separated, or 'any')
step for,step four,task_execution
step to,step two,task_execution
step tree,step three,task_execution
next stop,next step,task_execution
go back word,go backward,task_execution
show me moor,show me more,task_search
time her for,timer for,task_execution
resume a timer,resume the timer,task_execution
"""


def write_tables() -> None:
    (DATA / "substitutions.json").write_text(json.dumps(SUBSTITUTIONS, indent=1))
    (DATA / "blacklist_dangerous.txt").write_text(DANGEROUS)
    (DATA / "blacklist_professional.txt").write_text(PROFESSIONAL)
    (DATA / "blacklist_profanity.txt").write_text(PROFANITY)
    (DATA / "asr_rules.csv").write_text(ASR_RULES)


COMMON_WORDS = """
about after again all along also always another any around away back bad best
better big both bottom bright clean clear close cold cool dark deep down dry
each early easy even every fast few fine firm first flat free fresh full good
great hard heavy high hot inside just keep kind large last late left less
light little long loose loud low main many more most much narrow near new
next nice off often old only open other out over own part plain quick quiet
rough round safe same sharp short side slow small smooth soft some soon still
straight strong sure tall thick thin tight tiny top tough true turn under
warm weak wet wide wild wrong
bake bakes baked baking blend boil boils boiled boiling brew brush build built
care carry check chill chop clean cleaned cleaning coat cook cooked cooking
cool cover cut drain dress drill drop dry fill fix fixed fixing fold fry glue
grate grill grind grow hang heat hold install knead knit layer level lift
measure melt mix mount nail oil organize paint painted painting patch peel
polish pour press prime pull push remove removed removing repair rinse roast
roll rub sand saw scrape scrub seal season serve set sew shake sharpen simmer
slice soak spread spray sprayed spraying sprinkle squeeze stain steam stir
store strain stretch tape taste test toast toss trim turn wash washed washing
wax whisk wipe wire
board bolt bowl box brush bucket cable car card chair cloth coat cup deck
dish door drain drawer drill fan fence file floor frame garden gate glass
glue grout hammer handle hinge hole hook hose house jar key kit knife knob
ladder lamp level lock maker mesh mirror nail net pad pan panel paper paste
pearl pedal pin pipe plank plate pliers plug pole post pot rack rail rag roof
rope router saw screen screw seat shed sheet shelf shelf sink spray stand
stone stool strap string stud table tank tape tile tool towel tray tub vent
wall wheel window wire wood yard
apple banana bean beef bread butter cake candy carrot cheese chicken chili
chip chocolate cocoa coconut coffee corn cream curry dough egg fish flour
fruit garlic ginger grape gravy ham herb honey ice jam juice kale lemon lime
meat milk mint mushroom noodle nut oat oil onion orange pasta pea peach
peanut pear pepper pie pizza pork potato rice salad salt sauce soup spice
steak sugar syrup tea toast tomato vanilla water yeast
"""


def write_vocabulary(docs: list[dict]) -> None:
    words: set[str] = set(w for w in COMMON_WORDS.split() if len(w) >= 3)
    for doc in docs:
        words.update(t for t in tokenize(doc["title"]) if len(t) >= 3)
        for ingredient in doc.get("ingredients", []):
            words.update(t for t in tokenize(ingredient["name"]) if len(t) >= 3)
        for step in doc["steps"]:
            words.update(t for t in tokenize(step) if len(t) >= 3)
    # never list the joined compounds the splitter is supposed to handle
    words -= {"spraypaint", "coffeemaker", "doorknob", "teakettle", "windowpane"}
    (DATA / "vocabulary.txt").write_text("\n".join(sorted(words)) + "\n")


# --- templates ------------------------------------------------------------------

TEMPLATES = {
    "greeting": {
        "slots": ["daypart"],
        "variants": [
            "Good {daypart}! I can walk you through recipes and home projects. Try saying, how to wash a car, or, search bubble tea recipe.",
            "Good {daypart}! Tell me what you'd like to cook or fix, for example, how to patch drywall, or, find me a taco recipe.",
        ],
    },
    "welcome_prompt": {
        "slots": [],
        "variants": [
            "Tell me what you'd like to cook or fix and I'll find a task for you.",
            "What would you like to work on? Name a dish or a home project.",
        ],
    },
    "clarify_question": {
        "slots": [],
        "variants": [
            "Quick question first: any diet constraints or cuisine preference, like vegetarian, nut-free, or Mexican food? Say no preference to skip.",
            "Before I search: should I stick to a diet like vegetarian or a cuisine like Chinese food? You can say no preference.",
        ],
    },
    "catalog": {
        "slots": ["count"],
        "variants": [
            "I found {count} matching tasks. Here are some options.",
            "Okay, {count} results. Take a look at these.",
        ],
    },
    "no_results": {
        "slots": [],
        "variants": [
            "I couldn't find a matching task. Try rephrasing, for example, how to clean grout, or, banana bread recipe.",
            "Nothing came up for that. Could you say it another way? Naming the dish or the thing to fix helps.",
        ],
    },
    "comparison": {
        "slots": [],
        "variants": [
            "Here's how they compare.",
            "Let me line those up for you.",
        ],
    },
    "overview": {
        "slots": ["title"],
        "variants": [
            "Great choice! Here's {title}.",
            "You picked {title}.",
        ],
    },
    "overview_confirm": {
        "slots": [],
        "variants": [
            "Shall we start? Say yes to begin, or go back to see other options.",
            "Ready to begin? Say yes to start, or say go back for more choices.",
        ],
    },
    "overview_detail_recipe": {
        "slots": [],
        "variants": [
            "Here's the full ingredient list:",
            "You'll need these ingredients:",
        ],
    },
    "overview_detail_diy": {
        "slots": ["steps"],
        "variants": [
            "This project has {steps} steps, and I'll read each one as we go.",
            "It breaks down into {steps} steps; I'll guide you through one at a time.",
        ],
    },
    "step": {
        "slots": ["index", "total"],
        "variants": [
            "Step {index} of {total}.",
            "Step {index} of {total}, here we go.",
        ],
    },
    "step_detail": {
        "slots": [],
        "variants": [
            "Here's more detail.",
            "Sure, the details:",
        ],
    },
    "step_tips": {
        "slots": [],
        "variants": [
            "One more tip.",
            "Here's a tip for this step.",
        ],
    },
    "no_more_detail": {
        "slots": [],
        "variants": [
            "That's everything I have for this step. Say next when you're ready.",
            "No more detail on this one. Say next to keep going or repeat to hear it again.",
        ],
    },
    "last_step_prompt": {
        "slots": [],
        "variants": [
            "That was the last step. Say I'm done to finish up, or go to an earlier step to review.",
            "You're on the final step. When you finish, say I'm done.",
        ],
    },
    "completed": {
        "slots": [],
        "variants": [
            "Congratulations, you finished the whole task! Nice work. Say stop whenever you're ready to go.",
            "All done, great work! You completed every step. Say stop when you want to wrap up.",
        ],
    },
    "help": {
        "slots": [],
        "variants": [
            "You can say things like, how to fix a squeaky door, or, search pancake recipes. Say stop to end.",
            "Try naming a task, for example, say how to clean grout, or ask for a recipe. Say stop to end.",
        ],
    },
    "help_welcome": {
        "slots": [],
        "variants": [
            "Say what you'd like to do, for example, how to wash a car, or, find me a pancake recipe.",
            "You can ask for any recipe or home project. For example, say, how to hang pictures.",
        ],
    },
    "help_clarification": {
        "slots": [],
        "variants": [
            "You can say a diet like vegetarian, a cuisine like Mexican food, or say no preference.",
            "Name a diet or cuisine, say, vegan, or Italian, or just say no preference.",
        ],
    },
    "help_catalog": {
        "slots": [],
        "variants": [
            "You can say, the first one, to pick a result, say more for other options, or search for something else.",
            "Pick a result by saying, number one, two, or three, or say more choices. You can also start a new search.",
        ],
    },
    "help_comparison": {
        "slots": [],
        "variants": [
            "You can say, the first one, to pick, or say go back to see the list again.",
            "Say a number to choose one, or say go back for the full list.",
        ],
    },
    "help_overview": {
        "slots": [],
        "variants": [
            "Say yes to start this task, more details to hear the ingredients, or go back to pick another.",
            "You can say yes to begin, ask for more details, or say go back to browse again.",
        ],
    },
    "help_step": {
        "slots": [],
        "variants": [
            "I can't switch tasks mid-way, but you can say next, repeat, or go to step three. Say I'm done when you finish, or stop to end.",
            "While we're cooking along, you can say next, go back, or ask me a question about this step. Say stop to end the session.",
        ],
    },
    "help_completed": {
        "slots": [],
        "variants": [
            "The task is complete. You can say go back to review the last step, or say stop to finish.",
            "You're all done here. Say stop to end, or go back to revisit a step.",
        ],
    },
    "qa_decline": {
        "slots": [],
        "variants": [
            "I don't have a good answer for that one. You can always say repeat, or ask about the current step.",
            "I'm not sure about that. Try asking about the ingredients or the current step.",
        ],
    },
    "repeat_empty": {
        "slots": [],
        "variants": [
            "There's nothing to repeat yet. Tell me what you'd like to cook or fix.",
        ],
    },
    "favorites": {
        "slots": [],
        "variants": [
            "Happy to share! Whether you're after a cozy recipe or a weekend task, these favorite picks are close to my heart.",
            "These favorite picks of mine cover a comfy recipe and a fun task or two; plants, crafts, and home decor are my weakness.",
        ],
    },
    "choose_prompt": {
        "slots": [],
        "variants": [
            "Which one would you like? Say, the first one, the second one, or the third one.",
            "Just tell me which: number one, number two, or number three.",
        ],
    },
    "no_problem": {
        "slots": [],
        "variants": [
            "No problem. Tell me more about what you want, or say more choices to keep browsing.",
            "Okay. You can describe the task differently, or say more for other options.",
        ],
    },
    "goodbye": {
        "slots": [],
        "variants": [
            "Goodbye! Come back anytime you want to cook or fix something.",
            "Bye for now! Your progress is saved if you want to pick this up later.",
        ],
    },
    "safety_dangerous": {
        "slots": [],
        "variants": [
            "I can't help with that task, it wouldn't be safe. Let's stop here; come back anytime for cooking or home projects.",
        ],
    },
    "safety_professional": {
        "slots": [],
        "variants": [
            "That one really needs a licensed professional, so I'll sit it out. I can help with everyday cooking and home projects instead.",
            "I'd leave that to a professional. How about a home project or a recipe I can actually walk you through?",
        ],
    },
    "safety_profanity": {
        "slots": [],
        "variants": [
            "Let's keep it friendly. Back to your task: tell me what you'd like to do next.",
            "I'll let that one slide. Where were we? Tell me what you'd like to do next.",
        ],
    },
    "apology": {
        "slots": [],
        "variants": [
            "Something went wrong on my end. Could you try that again?",
            "I hit a snag processing that. Mind trying once more?",
        ],
    },
    "timer_fired": {
        "slots": [],
        "variants": [
            "Ding! Your timer just finished.",
            "Heads up, your timer is done.",
        ],
    },
    "list_add_ack": {
        "slots": ["item"],
        "variants": [
            "Added {item} to your shopping list.",
            "Done, {item} is on your shopping list.",
        ],
    },
    "list_add_miss": {
        "slots": ["item"],
        "variants": [
            "I didn't catch what to add. Try, add flour to my shopping list.",
        ],
    },
    "list_remove_ack": {
        "slots": ["item"],
        "variants": [
            "Removed {item} from your shopping list.",
            "Okay, I took {item} off your shopping list.",
        ],
    },
    "list_remove_miss": {
        "slots": ["item"],
        "variants": [
            "I couldn't find that on your shopping list, sorry.",
        ],
    },
    "timer_set_ack": {
        "slots": ["duration"],
        "variants": [
            "Timer set for {duration}.",
            "Okay, {duration} on the clock, starting now.",
        ],
    },
    "timer_set_miss": {
        "slots": [],
        "variants": [
            "For how long? Say something like, set a timer for five minutes.",
        ],
    },
    "timer_pause_ack": {
        "slots": [],
        "variants": [
            "Timer paused. Say resume the timer when you're ready.",
        ],
    },
    "timer_pause_miss": {
        "slots": [],
        "variants": [
            "There's no running timer to pause, sorry.",
        ],
    },
    "timer_resume_ack": {
        "slots": [],
        "variants": [
            "Timer resumed.",
        ],
    },
    "timer_resume_miss": {
        "slots": [],
        "variants": [
            "There's no paused timer to resume, sorry.",
        ],
    },
    "timer_cancel_ack": {
        "slots": [],
        "variants": [
            "Timer cancelled.",
        ],
    },
    "timer_cancel_miss": {
        "slots": [],
        "variants": [
            "There's no active timer to cancel, sorry.",
        ],
    },
}

FAVORITES = [
    {"task_id": "d-grow-tomatoes",
     "blurb": "I adore growing tomatoes indoors; watching the first fruit set never gets old."},
    {"task_id": "d-succulent",
     "blurb": "Caring for a succulent is the gentlest way to start a plant habit."},
    {"task_id": "d-birdhouse",
     "blurb": "Building a birdhouse is my favorite weekend of sawdust and songbirds."},
    {"task_id": "d-candle",
     "blurb": "Making a scented candle turns the whole house cozy by evening."},
    {"task_id": "r-cinnamon-rolls",
     "blurb": "The gooey cinnamon roll recipe fills the kitchen with the best smell I know."},
    {"task_id": "r-tomato-sauce",
     "blurb": "The fresh tomato sauce recipe tastes like late summer in a jar."},
]


def write_templates() -> None:
    (DATA / "templates.json").write_text(json.dumps(
        {"responders": TEMPLATES, "favorites": FAVORITES}, indent=1))


# --- simulator specs --------------------------------------------------------------

DISHES = [
    "tacos", "banana bread", "pancakes", "chocolate chip cookies", "bubble tea",
    "fried rice", "tomato soup", "pizza", "lasagna", "hummus", "guacamole",
    "brownies", "apple pie", "french toast", "mac and cheese", "chicken curry",
    "pad thai", "greek salad", "lemonade", "chocolate fudge", "cinnamon rolls",
    "spring rolls", "dumplings", "an omelette", "waffles", "a smoothie",
    "garlic bread", "quesadillas", "carbonara", "grilled cheese",
]
DIY_NAMES = [
    "wash a car", "clean the grout", "fix a leaky faucet", "paint a room",
    "install a ceiling fan", "unclog a drain", "remove spray paint",
    "hang pictures", "build a birdhouse", "grow tomatoes indoors",
    "organize my closet", "sharpen a knife", "polish wood furniture",
    "fix a squeaky door", "remove rust from metal", "clean white shoes",
    "patch drywall", "wash windows", "clean a microwave",
    "care for a succulent", "knit a scarf", "make a scented candle",
    "frame a poster", "fix a flat bike tire", "clean hardwood floors",
    "remove wallpaper", "install a shelf", "clean a coffee maker",
    "paint kitchen cabinets", "fix a running toilet", "start a compost bin",
    "hang a heavy mirror", "build a cheese board",
]
INGREDIENTS = [
    "flour", "sugar", "butter", "eggs", "milk", "condensed milk",
    "cocoa powder", "garlic", "onions", "tomatoes", "cheese", "chicken",
    "rice", "lemon juice", "olive oil", "baking soda", "vanilla extract",
    "chocolate chips", "basil", "soy sauce",
]

INTENT_TEMPLATES = {
    "sentiment:affirm": [
        "yes", "yeah", "yes please", "sounds good", "okay", "alright",
        "that works", "perfect", "of course", "definitely", "i'm ready",
        "let's do it", "sure", "go ahead", "yep", "sounds great",
    ],
    "sentiment:negate": [
        "no", "nope", "no thanks", "not really", "i don't think so", "nah",
        "definitely not", "i don't want that", "never mind", "not now",
        "no not that one", "i don't like these",
    ],
    "sentiment:neutral": [
        "maybe", "i'm not sure", "i guess", "hmm", "i don't know", "perhaps",
        "either way", "not sure yet", "it depends",
    ],
    "task_request": [
        "how to {diy}", "how to make {dish}", "i want to make {dish}",
        "i want to learn how to {diy}", "search {dish} recipe for me",
        "find me a {dish} recipe", "show me how to {diy}",
        "can you teach me to {diy}", "i need to {diy}",
        "looking for a {dish} recipe", "help me {diy}", "{dish} recipe please",
        "i would like to make {dish}", "what's the best way to {diy}",
        "teach me how to make {dish}", "search for how to {diy}",
    ],
    "navigation:go_to_step": [
        "go to step {step_num}", "jump to step {step_num}",
        "take me to step {step_num}", "step {step_num}",
        "go back to step {step_num}", "skip to step {step_num}",
    ],
    "navigation:forward": [
        "next", "next step", "go on", "move on", "continue",
        "skip this step", "go forward {small_num} steps",
        "skip ahead {small_num} steps",
    ],
    "navigation:backward": [
        "go back", "previous step", "back", "go back {small_num} steps",
        "step back", "go backward",
    ],
    "navigation:more_choice": [
        "more options", "show me more", "show me more options",
        "what else do you have", "more choices please", "next page",
    ],
    "navigation:less_choice": [
        "show me fewer options", "fewer choices", "previous page",
        "show me less", "less options please",
    ],
    "detail_request": [
        "more details", "tell me more", "more details please",
        "can you elaborate", "give me the details", "more information",
        "any tips", "what do you mean by that",
    ],
    "task_complete": [
        "i'm done", "done", "i am done", "i finished", "all done",
        "task complete", "we're finished", "i have finished the task",
    ],
    "stop": [
        "stop", "exit", "quit", "goodbye", "end the conversation", "bye",
    ],
    "repeat": [
        "repeat", "repeat that", "say that again", "can you repeat that",
        "one more time", "pardon", "i didn't catch that",
    ],
    "help": [
        "help", "i need help", "what can i say", "i'm confused",
        "what are my options", "how does this work",
    ],
    "question": [
        "how long does this take?", "what temperature should the oven be?",
        "how much {ingredient} do i need?", "can i use {ingredient} instead?",
        "what should i do if it sticks?", "why do we need to wait?",
        "is it supposed to look like this?", "how do i know when it's done?",
        "where should i put it?", "what's the next ingredient?",
        "do i need to preheat the oven?", "how many steps are left?",
    ],
    "list:add": [
        "add {ingredient} to my shopping list", "put {ingredient} on my list",
        "add {ingredient} to the list",
        "can you add {ingredient} to my shopping list",
        "put {ingredient} on the shopping list",
        "add some {ingredient} to my list",
    ],
    "list:remove": [
        "remove {ingredient} from my list",
        "take {ingredient} off my shopping list",
        "delete {ingredient} from the list",
        "remove {ingredient} from my shopping list",
        "take {ingredient} off the list",
    ],
    "timer:set": [
        "set a timer for {duration}", "start a timer for {duration}",
        "set the timer for {duration}", "timer for {duration} please",
        "remind me in {duration}", "create a timer for {duration}",
    ],
    "timer:pause": [
        "pause the timer", "hold the timer", "pause my timer",
        "can you pause the timer",
    ],
    "timer:resume": [
        "resume the timer", "unpause the timer", "resume my timer",
        "continue the timer",
    ],
    "timer:cancel": [
        "cancel the timer", "stop the timer", "delete the timer",
        "clear the timer", "turn off the timer",
    ],
    "ignore": [
        "hello", "hi there", "good morning", "what's up", "i like turtles",
        "blah blah", "you're funny", "tell me a joke",
    ],
}

INTENT_SLOTS = {
    "dish": DISHES,
    "diy": DIY_NAMES,
    "ingredient": INGREDIENTS,
    "step_num": ["one", "two", "three", "four", "five", "six", "seven",
                 "eight", "nine", "ten", "2", "3", "4", "5", "7"],
    "small_num": ["two", "three", "2", "3", "four"],
    "duration": ["five minutes", "ten minutes", "30 seconds", "one hour",
                 "15 minutes", "two hours", "90 seconds", "three minutes",
                 "45 seconds", "twenty minutes"],
}
NOISE = ["um", "uh", "please", "like", "you know", "hmm", "actually", "well", "alexa"]

QUESTION_TEMPLATES = {
    "mrc": [
        "use what tool to {verb}?", "use what {noun} to {verb}?",
        "what tool do i use to {verb}?",
        "what should i use to {verb} the {noun}?",
        "how long should i {verb} it?", "what do i do after i {verb} it?",
        "where do i put the {noun}?", "what temperature does it say to use?",
        "do i need to {verb} it first?", "which {noun} should i use?",
        "what's the next thing to do?", "how do i {verb} them?",
        "when do i add the {noun}?", "how long do i leave it in?",
    ],
    "faq": [
        "how should i know the {noun} is {adj}?",
        "how do i know when it's done?", "why is my {noun} {adj}?",
        "is it ok if the {noun} looks {adj}?", "what happens if i skip this?",
        "can i make this ahead of time?", "how do i store the leftovers?",
        "why did my {noun} turn out {adj}?", "is it normal for it to look {adj}?",
        "do other people have trouble with this part?",
    ],
    "factual": [
        "how much is {num} {unit} in {unit2}?",
        "how much is {num} {unit}?",
        "how much is that in {unit2}?",
        "what is {num} {unit} in {unit2}?",
        "how many {unit2} are in a {unit}?",
        "what temperature does water boil at?",
        "how many calories are in {ingredient}?",
        "who invented the {noun}?", "what year was the {noun} invented?",
        "what is {num} times {num2}?", "how many ounces in a pound?",
        "what's the capital of france?", "convert {num} {unit} to {unit2}",
    ],
    "ingredient": [
        "how much {ingredient} do i need?",
        "how many cups of {ingredient} does it take?",
        "do i need {ingredient} for this?",
        "what amount of {ingredient} goes in?",
        "does this recipe use {ingredient}?",
        "how much {ingredient} should i add?",
        "is there {ingredient} in this recipe?",
        "how much of the {ingredient} do we need?",
    ],
    "substitute": [
        "i don't have {ingredient}, can i use something else?",
        "what can i substitute for {ingredient}?",
        "can i replace {ingredient} with something?",
        "is there an alternative to {ingredient}?",
        "what can i use instead of {ingredient}?",
        "i'm out of {ingredient}, what now?",
        "any substitute for {ingredient}?",
        "can i swap the {ingredient} for something else?",
    ],
}
QUESTION_SLOTS = {
    "verb": ["blend", "whisk", "stir", "chop", "fold", "knead", "drain",
             "simmer", "sand", "drill", "scrub", "rinse"],
    "noun": ["mixture", "dough", "batter", "sauce", "pan", "bowl", "surface",
             "bracket", "patch", "wall"],
    "adj": ["mixed", "thick", "sticky", "brown", "dry", "lumpy", "smooth",
            "wet", "done", "firm"],
    "num": ["14", "2", "3", "8", "16", "one", "five"],
    "num2": ["2", "7", "12", "100", "three"],
    "unit": ["ounce", "cup", "pound", "tablespoon", "liter", "gram"],
    "unit2": ["gram", "milliliter", "teaspoon", "ounce", "cup"],
    "ingredient": INGREDIENTS,
}


def write_simulator_specs() -> tuple[SimulatorSpec, SimulatorSpec]:
    intent_spec = SimulatorSpec(
        templates={k: tuple(v) for k, v in INTENT_TEMPLATES.items()},
        slot_values={k: tuple(v) for k, v in INTENT_SLOTS.items()},
        noise_tokens=tuple(NOISE),
    )
    intent_spec.save(DATA / "simulator_intents.json")
    question_spec = SimulatorSpec(
        templates={k: tuple(v) for k, v in QUESTION_TEMPLATES.items()},
        slot_values={k: tuple(v) for k, v in QUESTION_SLOTS.items()},
        noise_tokens=(),
        mix_prefixes=(),
        mix_suffixes=(),
        mix_probability=0.0,
    )
    question_spec.save(DATA / "simulator_questions.json")
    return intent_spec, question_spec


# --- models ------------------------------------------------------------------------

def train_models(intent_spec: SimulatorSpec, question_spec: SimulatorSpec,
                 docs: list[dict]) -> None:
    train_spec, _ = split_templates(intent_spec, holdout_fraction=0.25, seed=SEED)
    data = simulate_training_data(train_spec, 3000, seed=SEED)
    model = train_intent_model(data, TrainConfig(l2=3e-5, max_epochs=400))
    model.save(DATA / "intent_model.json")
    print(f"intent model: {model.linear.epochs_run} epochs, "
          f"loss {model.linear.train_loss:.4f}")

    rng = random.Random(SEED)
    domain_data = []
    for dish in DISHES:
        domain_data.append((dish, COOKING))
        domain_data.append((f"make {dish}", COOKING))
    for name in DIY_NAMES:
        domain_data.append((name, DIY))
    extra_cooking = ["beef stew", "egg fried rice", "peach cobbler", "miso soup",
                     "shrimp scampi", "roast chicken", "potato salad"]
    extra_diy = ["clean gutters", "fix a zipper", "mount a tv",
                 "paint the fence", "seal a driveway", "bleed a radiator",
                 "replace a doorbell"]
    for name in extra_cooking:
        domain_data.append((name, COOKING))
    for name in extra_diy:
        domain_data.append((name, DIY))
    rng.shuffle(domain_data)
    domain_model = train_domain_model(domain_data)
    domain_model.save(DATA / "domain_model.json")

    contexts = [step for doc in docs for step in doc["steps"]]
    qrng = random.Random(SEED + 1)
    qdata = []
    for utterance, labels in simulate_training_data(question_spec, 2500, seed=SEED + 2):
        qdata.append((utterance, qrng.choice(contexts), next(iter(labels))))
    question_model = train_question_model(qdata)
    question_model.save(DATA / "question_model.json")


# --- search labels and evaluation sets ------------------------------------------------

ADJECTIVES = {
    "classic", "moist", "fluffy", "fresh", "creamy", "tangy", "silky",
    "crispy", "chunky", "easy", "double", "thick", "gooey", "lattice",
    "custardy", "homemade", "weeknight", "fragrant", "crisp", "skillet",
    "baked", "cheesy", "simple", "diner", "style",
}

INFLECT_ING = {
    "wash": "washing", "clean": "cleaning", "fix": "fixing",
    "remove": "removing", "paint": "painting", "install": "installing",
    "hang": "hanging", "grow": "growing", "build": "building",
    "knit": "knitting", "frame": "framing", "polish": "polishing",
    "sharpen": "sharpening", "organize": "organizing", "unclog": "unclogging",
    "patch": "patching", "caulk": "caulking", "make": "making",
    "start": "starting",
}
PLURALS = {
    "car": "cars", "window": "windows", "knife": "knives", "shoe": "shoes",
    "drain": "drains", "shelf": "shelves", "poster": "posters",
    "scarf": "scarves", "candle": "candles", "closet": "closets",
    "microwave": "microwaves", "mirror": "mirrors", "door": "doors",
}

HARD_QUERY_TEMPLATES = [
    ("easy {x} recipe", "recipe"),
    ("simple {x} recipe", "recipe"),
    ("good {x} recipe for dinner", "recipe"),
    ("quick {x} recipe at home", "recipe"),
]
HARD_FAMILIES = {
    "rice": ["r-fried-rice"],
    "chicken": ["r-chicken-tacos", "r-chicken-curry", "r-lemon-chicken"],
    "cheese": ["r-grilled-cheese", "r-mac-cheese", "r-quesadillas"],
    "lemon": ["r-lemon-bars", "r-lemon-chicken"],
    "tea": ["r-bubble-tea"],
    "cake": ["r-choc-cake"],
    "bread": ["r-banana-bread", "r-garlic-bread"],
}

COMPOUND_QUERIES = [
    ("remove spraypaint", ["d-remove-spray-paint"]),
    ("how to remove spraypaint", ["d-remove-spray-paint"]),
    ("clean my coffeemaker", ["d-clean-coffee-maker"]),
    ("fix a doorknob", ["d-doorknob"]),
    ("clean the teakettle", ["d-tea-kettle"]),
]

MULTI_POSITIVE_QUERIES = [
    ("banana recipes", ["r-banana-bread", "r-banana-pancakes", "r-banana-smoothie"]),
    ("tomato recipes", ["r-tomato-sauce", "r-tomato-soup", "r-bruschetta"]),
    ("chocolate dessert", ["r-brownies", "r-choc-fudge", "r-choc-cake"]),
    ("mexican food ideas", ["r-chicken-tacos", "r-burritos", "r-quesadillas"]),
    ("spaghetti dinner ideas", ["r-carbonara"]),
]


def _core_name(title: str) -> str:
    tokens = [t for t in title.split() if t]
    while tokens and tokens[0] in ("how", "to"):
        tokens.pop(0)
    while tokens and tokens[0] in ADJECTIVES:
        tokens.pop(0)
    return " ".join(tokens)


def _inflected(base: str) -> str | None:
    tokens = base.split()
    changed = False
    out = []
    for i, token in enumerate(tokens):
        if i == 0 and token in INFLECT_ING:
            out.append(INFLECT_ING[token])
            changed = True
        elif i == len(tokens) - 1 and token in PLURALS:
            out.append(PLURALS[token])
            changed = True
        else:
            out.append(token)
    # drop articles so that "washing a cars" never appears
    if changed and out and out[-1] in ("cars", "windows", "doors", "mirrors"):
        out = [t for t in out if t not in ("a", "an", "the")]
    return " ".join(out) if changed else None


def generate_queries(docs: list[dict]) -> list[tuple[str, list[str]]]:
    queries: list[tuple[str, list[str]]] = []
    for doc in docs:
        title = doc["title"]
        doc_id = doc["id"]
        base = title.replace("how to ", "")
        core = _core_name(title)
        queries.append((title, [doc_id]))
        if base != title:
            queries.append((base, [doc_id]))
        if core and core not in (base, title):
            queries.append((core, [doc_id]))
        if doc["domain"] == "cooking":
            queries.append((f"how to make {core}", [doc_id]))
            queries.append((f"{core} recipe", [doc_id]))
            queries.append((f"making {core}", [doc_id]))
        else:
            queries.append((f"best way to {base}", [doc_id]))
            queries.append((f"how do i {base}", [doc_id]))
            inflected = _inflected(base)
            if inflected:
                queries.append((inflected, [doc_id]))
    for template, _cue in HARD_QUERY_TEMPLATES:
        for family, positives in HARD_FAMILIES.items():
            queries.append((template.format(x=family), list(positives[:3])))
    queries.extend(COMPOUND_QUERIES)
    queries.extend(MULTI_POSITIVE_QUERIES)
    # dedupe, keeping the first label set for a repeated query string
    seen = {}
    for query, positives in queries:
        if query not in seen:
            seen[query] = positives
    return sorted(seen.items())


def write_search_labels(docs: list[dict]) -> None:
    corpus = load_corpus(DATA / "corpus.json")
    index = build_index(corpus)
    all_queries = generate_queries(docs)
    rng = random.Random(SEED + 7)
    rng.shuffle(all_queries)
    half = len(all_queries) // 2
    splits = {"train": all_queries[:half], "eval": all_queries[half:]}
    for name, pairs in splits.items():
        entries = []
        for query, positives in pairs:
            expanded = expand_query(query)
            result = retrieve(index, query, expanded, None, k=25)
            negatives = [c.doc_id for c in result.candidates
                         if c.doc_id not in positives][:12]
            entries.append(WeakLabelEntry(query, tuple(positives[:3]), tuple(negatives)))
        save_weak_labels(WeakLabelSet(tuple(entries)), DATA / f"weak_labels_{name}.json")
        print(f"weak labels ({name}): {len(entries)} queries")

    from taco.search import load_weak_labels
    train_set = load_weak_labels(DATA / "weak_labels_train.json")
    model = train_reranker(train_set, index, RankerTrainConfig(seed=SEED))
    model.save(DATA / "reranker.json")
    print("reranker weights:", dict(zip(model.feature_names, [round(w, 3) for w in model.weights])))


# --- evaluation datasets ----------------------------------------------------------------

BLANCHING_CONTEXT = (
    "Step 3: Blanch the tomatoes. Drop a few tomatoes into the boiling water. "
    "Let them blanch for about 30 seconds. Remove the tomatoes and place them "
    "on a cutting board to cool. Repeat with the remaining tomatoes. Don't "
    "leave the tomatoes in the water too long. Blanching loosens their skins, "
    "but leaving them in the pot for more than 30 seconds will cause them to "
    "actually start cooking, which will make them lose their flavor. Be "
    "careful when removing the tomatoes from the boiling water. The best "
    "tools to use are tongs or a large slotted spoon."
)

QA_EVAL_RECORDS = [
    {"context": BLANCHING_CONTEXT,
     "question": "Sorry, how long for blanching?",
     "answer": "Let them blanch for about 30 seconds."},
    {"context": BLANCHING_CONTEXT,
     "question": "Alexa, what tools should I use to remove the tomatoes from the boiling water?",
     "answer": "The best tools to use are tongs or a large slotted spoon."},
    {"context": BLANCHING_CONTEXT,
     "question": "What if I leave the tomatoes in the water too long?",
     "answer": "[No Answer]"},
]


def write_eval_sets(intent_spec: SimulatorSpec, docs: list[dict]) -> None:
    _, held_spec = split_templates(intent_spec, holdout_fraction=0.25, seed=SEED)
    samples = simulate_training_data(held_spec, 400, seed=SEED + 11)
    (EVAL / "intent_eval.json").write_text(json.dumps(
        [{"utterance": u, "labels": sorted(l)} for u, l in samples], indent=1))

    # task-name extraction pairs: scaffold template + embedded gold span
    rng = random.Random(SEED + 13)
    taskname_templates = [
        ("how to {x}?", "{x}"),
        ("How to {x}", "{x}"),
        ("search {x} recipe for me", "{x}"),
        ("find me a {x} recipe", "{x}"),
        ("i want to know how to {x}", "{x}"),
        ("show me how to {x}", "{x}"),
        ("can you teach me to {x} please", "{x}"),
        ("look up {x} for me", "{x}"),
        ("{x} recipe", "{x}"),
        ("alexa, how do i {x}", "{x}"),
    ]
    records = []
    for _ in range(150):
        template, gold = rng.choice(taskname_templates)
        name = rng.choice(DIY_NAMES + DISHES)
        records.append({"utterance": template.format(x=name),
                        "gold": gold.format(x=name).lower()})
    (EVAL / "taskname_eval.json").write_text(json.dumps(records, indent=1))

    held_cooking = ["strawberry shortcake", "beef stew", "egg fried rice",
                    "peach cobbler", "clam chowder", "veggie burgers",
                    "lentil soup", "banana muffins", "shrimp tacos", "fruit tart"]
    held_diy = ["clean gutters", "fix a zipper", "mount a tv on the wall",
                "paint the fence", "seal a driveway", "fix a wobbly chair",
                "clean window screens", "replace a doorbell", "stain a deck",
                "organize the garage"]
    domain_records = (
        [{"task_name": n, "domain": "cooking"} for n in held_cooking]
        + [{"task_name": n, "domain": "diy"} for n in held_diy]
    )
    (EVAL / "domain_eval.json").write_text(json.dumps(domain_records, indent=1))

    records = list(QA_EVAL_RECORDS)
    rng2 = random.Random(SEED + 17)
    step_texts = [s for d in docs for s in d["steps"]]
    extra = [
        (step_texts[3], "what is the capital of spain?", "[No Answer]"),
        ("Soak a combination whetstone in water for ten minutes.",
         "how long should i soak the whetstone?",
         "Soak a combination whetstone in water for ten minutes."),
        ("Whisk the eggs with the parmesan cheese and plenty of black pepper in a bowl. "
         "Crisp the pancetta in a wide pan over medium heat while the pasta cooks.",
         "what do i whisk the eggs with?",
         "Whisk the eggs with the parmesan cheese and plenty of black pepper in a bowl."),
        ("Fill the reservoir with equal parts white vinegar and water and run half a brew cycle, "
         "then pause the machine for thirty minutes. Finish the cycle, then run two full cycles "
         "of plain water to rinse out the vinegar taste.",
         "how long do i pause the machine?",
         "Fill the reservoir with equal parts white vinegar and water and run half a brew cycle, "
         "then pause the machine for thirty minutes."),
        ("Mount the house eight feet up a post facing away from the afternoon sun.",
         "who won the world cup?", "[No Answer]"),
    ]
    for context, question, answer in extra:
        records.append({"context": context, "question": question, "answer": answer})
    (EVAL / "qa_eval.json").write_text(json.dumps(records, indent=1))


# --- conversation cases ------------------------------------------------------------------

CASES = {
    "favorites.json": {
        "name": "favorites keywords",
        "turns": [
            {"utterance": "tell me your favorites",
             "require_keywords": ["recipe", "task", "favorite"],
             "forbid_keywords": ["sorry", "don't understand"]},
        ],
    },
    "cancel_regression.json": {
        "name": "cancel mid-task gives help, not a repeat",
        "turns": [
            {"utterance": "how to wash a car",
             "expect_state": "task_search.catalog"},
            {"utterance": "the first one",
             "expect_state": "task_preparation.overview"},
            {"utterance": "yes", "expect_state": "task_execution.step",
             "require_keywords": ["step 1"]},
            {"utterance": "cancel", "require_keywords": ["say"],
             "forbid_repeat": True, "expect_state": "task_execution.step"},
        ],
    },
    "search_clarify_flow.json": {
        "name": "recipe search with clarification",
        "turns": [
            {"utterance": "search bubble tea recipe for me",
             "expect_state": "task_search.clarification",
             "require_keywords": ["preference"]},
            {"utterance": "no preference",
             "expect_state": "task_search.catalog",
             "require_keywords": ["bubble tea"]},
            {"utterance": "the first one",
             "expect_state": "task_preparation.overview"},
            {"utterance": "yes",
             "expect_state": "task_execution.step",
             "require_keywords": ["step 1 of"]},
            {"utterance": "next",
             "require_keywords": ["step 2 of"]},
            {"utterance": "i'm done",
             "expect_state": "task_execution.completed",
             "forbid_keywords": ["sorry"]},
            {"utterance": "stop", "expect_end": True},
        ],
    },
    "diy_navigation.json": {
        "name": "step navigation with clamping",
        "turns": [
            {"utterance": "how to paint a room",
             "expect_state": "task_search.catalog"},
            {"utterance": "number one",
             "expect_state": "task_preparation.overview"},
            {"utterance": "yes", "require_keywords": ["step 1 of"]},
            {"utterance": "go to step three", "require_keywords": ["step 3 of"]},
            {"utterance": "go back two steps", "require_keywords": ["step 1 of"]},
            {"utterance": "go back", "require_keywords": ["step 1 of"]},
            {"utterance": "go to step forty", "require_keywords": ["say"],
             "expect_state": "task_execution.step"},
        ],
    },
    "timer_and_list.json": {
        "name": "list and timer acknowledgements",
        "turns": [
            {"utterance": "how to make fresh tomato sauce",
             "expect_state": "task_search.clarification"},
            {"utterance": "no preference", "expect_state": "task_search.catalog"},
            {"utterance": "the first one", "expect_state": "task_preparation.overview"},
            {"utterance": "add tomatoes to my shopping list",
             "require_keywords": ["tomatoes", "list"]},
            {"utterance": "yes", "require_keywords": ["step 1 of"]},
            {"utterance": "set a timer for five minutes",
             "require_keywords": ["5 minutes"]},
            {"utterance": "pause the timer", "require_keywords": ["paused"]},
            {"utterance": "resume the timer", "require_keywords": ["resumed"]},
            {"utterance": "cancel the timer", "require_keywords": ["cancelled"]},
        ],
    },
    "qa_during_task.json": {
        "name": "in-task question answering",
        "turns": [
            {"utterance": "how to make fresh tomato sauce"},
            {"utterance": "anything is fine", "expect_state": "task_search.catalog"},
            {"utterance": "the first one"},
            {"utterance": "yes", "require_keywords": ["step 1 of"]},
            {"utterance": "next", "require_keywords": ["step 2 of"]},
            {"utterance": "how long do i leave the tomatoes in the boiling water?",
             "require_keywords": ["thirty seconds"]},
            {"utterance": "what's the capital of france?",
             "forbid_keywords": ["thirty seconds"]},
        ],
    },
    "safety_dangerous.json": {
        "name": "dangerous task request ends the session",
        "turns": [
            {"utterance": "how to make explosives",
             "require_keywords": ["safe"],
             "expect_end": True},
        ],
    },
    "safety_professional.json": {
        "name": "professional task request redirects",
        "turns": [
            {"utterance": "how to file a lawsuit",
             "require_keywords": ["professional"],
             "expect_end": False,
             "expect_state": "task_search.welcome"},
        ],
    },
    "touch_equivalence.json": {
        "name": "touch select mirrors the spoken pick",
        "turns": [
            {"utterance": "how to wash a car", "expect_state": "task_search.catalog"},
            {"touch": [{"name": "action", "value": "select"},
                       {"name": "index", "value": "1"}],
             "expect_state": "task_preparation.overview"},
            {"touch": [{"name": "action", "value": "next"}],
             "expect_state": "task_execution.step",
             "require_keywords": ["step 1 of"]},
            {"touch": [{"name": "action", "value": "detail"}],
             "forbid_keywords": ["don't understand"]},
        ],
    },
    "help_everywhere.json": {
        "name": "greeting then contextual help",
        "turns": [
            {"utterance": "hello", "require_keywords": ["good"],
             "expect_state": "task_search.welcome"},
            {"utterance": "help", "require_keywords": ["say"]},
            {"utterance": "mumble mumble", "require_keywords": ["say"],
             "forbid_repeat": True},
        ],
    },
}


def write_cases() -> None:
    CONVS.mkdir(parents=True, exist_ok=True)
    for name, case in CASES.items():
        (CONVS / name).write_text(json.dumps(case, indent=1))


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    EVAL.mkdir(parents=True, exist_ok=True)
    docs = write_corpus()
    print(f"corpus: {len(docs)} documents")
    write_tables()
    write_vocabulary(docs)
    write_templates()
    intent_spec, question_spec = write_simulator_specs()
    train_models(intent_spec, question_spec, docs)
    write_search_labels(docs)
    write_eval_sets(intent_spec, docs)
    write_cases()
    print("done")


if __name__ == "__main__":
    main()
