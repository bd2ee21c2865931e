"""Fixture corpus content: cooking and DIY task documents.

Recipes carry deliberately overlapping ingredient lists (chocolate, cheese,
banana, tomato, lemon families) so that title-level relevance and
ingredient-level lexical matches diverge; that divergence is what the
re-ranking evaluation exercises.
"""

# (id, title, rating, minutes, popularity, cuisine, diet, ingredients, steps, faqs)
# ingredients: (name, quantity) pairs
RECIPES = [
    ("r-choc-chip-cookies", "classic chocolate chip cookies", 4.7, 35, 9100,
     ["american"], ["vegetarian"],
     [("flour", "2 and a quarter cups"), ("butter", "1 cup, softened"),
      ("sugar", "three quarters of a cup"), ("brown sugar", "three quarters of a cup"),
      ("eggs", "2 large"), ("vanilla extract", "1 teaspoon"),
      ("baking soda", "1 teaspoon"), ("salt", "half a teaspoon"),
      ("chocolate chips", "2 cups")],
     ["Preheat the oven to 375 degrees and line two baking sheets with parchment paper.",
      "Cream the butter with both sugars until light and fluffy. Beat in the eggs one at a time, then stir in the vanilla extract.",
      "Whisk the flour, baking soda, and salt in a separate bowl, then fold the dry mix into the wet ingredients. Stir in the chocolate chips last so they stay whole.",
      "Drop rounded spoonfuls of dough onto the sheets, leaving two inches between them. Tip: chill the dough for thirty minutes first if you like thicker cookies.",
      "Bake for 9 to 11 minutes until the edges turn golden. Let the cookies rest on the sheet for five minutes before moving them to a rack."],
     [("how do i keep the cookies from spreading too much",
       "Chill the dough before baking and use a cool baking sheet for each batch."),
      ("can i freeze the cookie dough",
       "Yes, scoop the dough into balls and freeze them for up to three months; bake straight from frozen with two extra minutes.")]),

    ("r-choc-chip-muffins", "chocolate chip muffins", 4.5, 30, 4100,
     ["american"], ["vegetarian"],
     [("flour", "2 cups"), ("sugar", "half a cup"), ("milk", "1 cup"),
      ("butter", "a third of a cup, melted"), ("eggs", "1 large"),
      ("baking powder", "1 tablespoon"), ("chocolate chips", "1 cup")],
     ["Preheat the oven to 400 degrees and line a muffin tin with paper cups.",
      "Whisk the flour, sugar, and baking powder together. In another bowl beat the milk, melted butter, and egg.",
      "Pour the wet mix into the dry mix and stir until just combined. The batter should stay a little lumpy. Fold in the chocolate chips.",
      "Fill each cup two thirds full and bake for 18 to 20 minutes until a toothpick comes out clean."],
     [("why are my muffins dense",
       "Overmixing develops gluten and makes muffins dense; stir only until the flour disappears.")]),

    ("r-brownies", "double chocolate brownies", 4.8, 45, 7800,
     ["american"], ["vegetarian"],
     [("dark chocolate", "7 ounces, chopped"), ("butter", "three quarters of a cup"),
      ("sugar", "1 cup"), ("eggs", "3 large"), ("flour", "half a cup"),
      ("cocoa powder", "a quarter cup"), ("chocolate chips", "half a cup")],
     ["Preheat the oven to 350 degrees and butter an eight inch square pan.",
      "Melt the dark chocolate and butter together over low heat, stirring until smooth. Let the mixture cool slightly.",
      "Whisk in the sugar, then the eggs one at a time. Sift in the flour and cocoa powder and fold gently. Stir in the chocolate chips.",
      "Pour the batter into the pan and bake for 25 to 30 minutes. Tip: pull them out while the center still looks slightly underdone for fudgy brownies."],
     [("how do i know when brownies are done",
       "A toothpick near the edge should come out with moist crumbs while the center still looks soft.")]),

    ("r-hot-chocolate", "thick hot chocolate", 4.4, 10, 3000,
     ["american"], ["vegetarian"],
     [("milk", "2 cups"), ("cocoa powder", "2 tablespoons"),
      ("chocolate chips", "a third of a cup"), ("sugar", "1 tablespoon")],
     ["Warm the milk in a saucepan over medium heat until it steams; do not let it boil.",
      "Whisk in the cocoa powder and sugar until fully dissolved.",
      "Drop in the chocolate chips and whisk until the drink turns thick and glossy. Serve right away."],
     []),

    ("r-choc-cake", "chocolate fudge cake", 4.6, 75, 5200,
     ["american"], ["vegetarian"],
     [("flour", "1 and three quarter cups"), ("cocoa powder", "three quarters of a cup"),
      ("sugar", "2 cups"), ("eggs", "2 large"), ("milk", "1 cup"),
      ("vegetable oil", "half a cup"), ("baking soda", "1 and a half teaspoons")],
     ["Preheat the oven to 350 degrees. Grease two nine inch round cake pans and dust them with cocoa powder.",
      "Sift the flour, cocoa powder, sugar, and baking soda into a large bowl.",
      "Beat in the eggs, milk, and oil for two minutes, then stir in a cup of boiling water. The batter will be thin.",
      "Divide the batter between the pans and bake for 30 to 35 minutes. Cool completely before frosting."],
     []),

    ("r-choc-fudge", "easy chocolate fudge", 4.3, 130, 2300,
     ["american"], ["vegetarian", "gluten-free"],
     [("condensed milk", "one 14-ounce can"), ("cocoa powder", "a quarter cup, unsweetened"),
      ("chocolate chips", "3 cups"), ("butter", "a quarter cup"),
      ("vanilla extract", "1 teaspoon")],
     ["Line an eight inch pan with parchment and butter the sides lightly.",
      "Add the condensed milk, unsweetened cocoa powder, and chocolate chips to a heavy saucepan. Use a whisk to blend the ingredients over low heat until they are completely mixed. It is normal for the mixture to become very thick as you stir.",
      "Take the pan off the heat and beat in the butter and vanilla extract until glossy.",
      "Spread the fudge into the lined pan and chill for two hours before cutting into squares. Tip: run your knife under hot water for cleaner cuts."],
     [("how should i know the ingredients are completely mixed",
       "The mixture turns uniformly dark and pulls away from the sides of the pan with no dry streaks of cocoa."),
      ("how long does the fudge need to set",
       "Give it at least two hours in the refrigerator, or overnight for the firmest texture.")]),

    ("r-milkshake", "chocolate milkshake", 4.2, 5, 1900,
     ["american"], ["vegetarian", "gluten-free"],
     [("chocolate ice cream", "3 scoops"), ("milk", "half a cup"),
      ("cocoa powder", "1 teaspoon")],
     ["Add the ice cream, milk, and cocoa powder to a blender.",
      "Blend on high for thirty seconds until smooth. Pour into a chilled glass and serve."],
     []),

    ("r-banana-bread", "moist banana bread", 4.8, 70, 8700,
     ["american"], ["vegetarian"],
     [("bananas", "3 very ripe"), ("flour", "2 cups"), ("sugar", "three quarters of a cup"),
      ("butter", "half a cup, melted"), ("eggs", "1 large"),
      ("baking soda", "1 teaspoon"), ("vanilla extract", "1 teaspoon")],
     ["Preheat the oven to 350 degrees and butter a nine by five inch loaf pan.",
      "Mash the bananas in a large bowl until mostly smooth. Stir in the melted butter, sugar, egg, and vanilla.",
      "Sprinkle the baking soda over the batter, then fold in the flour until no dry spots remain.",
      "Pour the batter into the pan and bake for 55 to 60 minutes. Tip: tent the loaf with foil if the top browns too fast.",
      "Cool in the pan for ten minutes, then turn the loaf out onto a rack."],
     [("can i use frozen bananas",
       "Yes, thaw them fully and drain the extra liquid before mashing."),
      ("why did my banana bread sink in the middle",
       "Underbaking or too much banana makes the center collapse; test with a skewer before pulling it out.")]),

    ("r-banana-pancakes", "fluffy banana pancakes", 4.5, 25, 3600,
     ["american"], ["vegetarian"],
     [("bananas", "2 ripe"), ("flour", "1 and a half cups"), ("milk", "1 and a quarter cups"),
      ("eggs", "1 large"), ("baking powder", "1 tablespoon"), ("butter", "2 tablespoons, melted")],
     ["Mash one banana and slice the other into thin coins.",
      "Whisk the flour and baking powder, then stir in the milk, egg, melted butter, and mashed banana until just combined.",
      "Cook ladles of batter on a buttered griddle over medium heat. Flip when bubbles pop on the surface, about two minutes per side.",
      "Stack the pancakes with the banana coins between layers and serve warm."],
     []),

    ("r-banana-smoothie", "banana smoothie", 4.1, 5, 1500,
     [], ["vegetarian", "gluten-free"],
     [("bananas", "2 frozen"), ("milk", "1 cup"), ("honey", "1 tablespoon")],
     ["Break the frozen bananas into chunks and add them to a blender with the milk and honey.",
      "Blend until completely smooth, about one minute, and pour into a tall glass."],
     []),

    ("r-tomato-sauce", "fresh tomato sauce", 4.6, 50, 5600,
     ["italian"], ["vegetarian", "vegan", "gluten-free", "dairy-free", "nut-free"],
     [("tomatoes", "3 pounds, ripe"), ("olive oil", "a quarter cup"),
      ("garlic", "4 cloves, sliced"), ("basil", "a handful of leaves"),
      ("salt", "1 teaspoon")],
     ["Bring a large pot of water to a rolling boil and set a bowl of ice water beside it.",
      "Cut a shallow cross in the base of each tomato. Lower a few tomatoes into the boiling water and leave them for about thirty seconds, then move them straight to the ice water. Repeat with the rest. Tip: use tongs or a slotted spoon so you do not splash boiling water.",
      "Slip the skins off the cooled tomatoes, cut out the cores, and chop the flesh roughly.",
      "Warm the olive oil with the garlic in a wide pan until fragrant. Add the chopped tomatoes and salt and simmer for twenty minutes, crushing them as they soften.",
      "Tear in the basil, taste for salt, and simmer five more minutes until the sauce thickens."],
     [("how do i get the skins off the tomatoes",
       "Blanch them briefly in boiling water and shock them in ice water; the skins slip right off."),
      ("can i leave the seeds in the sauce",
       "Yes, the seeds are fine to eat; strain the sauce afterwards if you prefer it silky.")]),

    ("r-tomato-soup", "creamy tomato soup", 4.4, 40, 3900,
     ["american"], ["vegetarian", "gluten-free"],
     [("tomatoes", "2 pounds"), ("onion", "1 medium, diced"), ("butter", "3 tablespoons"),
      ("heavy cream", "half a cup"), ("garlic", "2 cloves")],
     ["Melt the butter in a soup pot and cook the onion and garlic until soft, about five minutes.",
      "Add the chopped tomatoes with their juices and simmer for twenty minutes.",
      "Blend the soup until smooth, then stir in the cream and warm it through without boiling. Season to taste."],
     []),

    ("r-bruschetta", "tomato basil bruschetta", 4.3, 20, 2500,
     ["italian"], ["vegetarian", "vegan", "dairy-free", "nut-free"],
     [("tomatoes", "4 ripe, diced"), ("baguette", "1, sliced"), ("garlic", "2 cloves"),
      ("basil", "ten leaves"), ("olive oil", "3 tablespoons")],
     ["Toast the baguette slices until golden and rub each one with a cut garlic clove.",
      "Toss the diced tomatoes with torn basil, olive oil, and a pinch of salt.",
      "Spoon the tomato mix over the toasts just before serving so they stay crisp."],
     []),

    ("r-carbonara", "spaghetti carbonara", 4.7, 30, 6800,
     ["italian"], [],
     [("spaghetti", "1 pound"), ("eggs", "3 large"), ("parmesan cheese", "1 cup, grated"),
      ("pancetta", "6 ounces, diced"), ("black pepper", "2 teaspoons")],
     ["Boil the spaghetti in well salted water until just shy of al dente. Save a cup of the pasta water before draining.",
      "Crisp the pancetta in a wide pan over medium heat while the pasta cooks.",
      "Whisk the eggs with the parmesan cheese and plenty of black pepper in a bowl.",
      "Pull the pan off the heat, add the drained pasta, then pour in the egg mixture while tossing fast. Loosen with splashes of pasta water until the sauce turns silky. Tip: the residual heat cooks the eggs; direct heat scrambles them."],
     [("how do i stop the eggs from scrambling",
       "Take the pan off the burner before adding the egg mixture and keep the pasta moving while you pour.")]),

    ("r-mac-cheese", "baked mac and cheese", 4.6, 55, 7200,
     ["american"], ["vegetarian"],
     [("macaroni", "1 pound"), ("cheddar cheese", "3 cups, shredded"),
      ("cream cheese", "4 ounces"), ("milk", "2 and a half cups"),
      ("butter", "4 tablespoons"), ("flour", "a quarter cup")],
     ["Boil the macaroni two minutes short of the package time and drain it.",
      "Melt the butter in a pot, whisk in the flour for one minute, then slowly whisk in the milk until the sauce thickens.",
      "Stir in the cream cheese and two cups of the cheddar cheese until melted. Fold in the macaroni.",
      "Scrape everything into a baking dish, top with the remaining cheddar cheese, and bake at 375 degrees for 20 minutes until bubbling."],
     []),

    ("r-grilled-cheese", "crispy grilled cheese sandwich", 4.2, 10, 2800,
     ["american"], ["vegetarian"],
     [("bread", "2 thick slices"), ("cheddar cheese", "2 slices"),
      ("monterey jack cheese", "1 slice"), ("butter", "1 tablespoon")],
     ["Butter one side of each bread slice all the way to the edges.",
      "Set one slice butter side down in a cold pan, stack on the cheddar cheese and monterey jack cheese, and close the sandwich butter side up.",
      "Cook over medium-low heat for three to four minutes per side until deeply golden and the cheese melts."],
     []),

    ("r-quesadillas", "cheese quesadillas", 4.3, 15, 3100,
     ["mexican"], ["vegetarian"],
     [("flour tortillas", "4 large"), ("cheddar cheese", "1 cup, shredded"),
      ("monterey jack cheese", "1 cup, shredded"), ("butter", "1 tablespoon")],
     ["Scatter both cheeses over half of each tortilla and fold them closed.",
      "Toast the quesadillas in a buttered skillet for two minutes per side until crisp and melted inside.",
      "Rest them for one minute, then slice into wedges and serve with salsa."],
     []),

    ("r-lasagna", "classic beef lasagna", 4.7, 95, 6400,
     ["italian"], [],
     [("lasagna noodles", "12 sheets"), ("ground beef", "1 pound"),
      ("ricotta cheese", "15 ounces"), ("mozzarella cheese", "3 cups, shredded"),
      ("parmesan cheese", "three quarters of a cup"), ("tomato sauce", "4 cups"),
      ("eggs", "1 large")],
     ["Brown the ground beef, then stir in the tomato sauce and simmer for ten minutes.",
      "Boil the lasagna noodles until pliable and lay them flat on oiled parchment.",
      "Beat the ricotta cheese with the egg and half of the parmesan cheese.",
      "Layer sauce, noodles, ricotta mix, and mozzarella cheese in a deep dish; repeat three times and finish with mozzarella and parmesan.",
      "Cover with foil and bake at 375 degrees for 45 minutes, uncovering for the last fifteen. Rest twenty minutes before slicing."],
     [("can i assemble lasagna the night before",
       "Yes, keep it covered in the refrigerator and add ten minutes to the covered baking time.")]),

    ("r-pizza", "homemade margherita pizza", 4.8, 120, 9500,
     ["italian"], ["vegetarian"],
     [("flour", "4 cups"), ("yeast", "2 teaspoons"), ("tomato sauce", "1 cup"),
      ("mozzarella cheese", "8 ounces, torn"), ("basil", "a handful"),
      ("olive oil", "2 tablespoons")],
     ["Stir the yeast into one and a half cups of warm water and let it foam for five minutes.",
      "Mix in the flour and a teaspoon of salt, knead for eight minutes, and let the dough rise for an hour until doubled.",
      "Stretch the dough into two rounds on floured parchment. Tip: press from the center outward and leave a thicker rim for the crust.",
      "Spread the tomato sauce thin, scatter the mozzarella cheese, and bake on a preheated stone at 500 degrees for eight minutes.",
      "Finish with fresh basil and a drizzle of olive oil."],
     [("why is my pizza dough not stretching",
       "The gluten is too tight; cover the dough and rest it ten more minutes before stretching again.")]),

    ("r-lemon-bars", "tangy lemon bars", 4.5, 60, 3300,
     ["american"], ["vegetarian"],
     [("lemon juice", "half a cup, fresh"), ("lemons", "zest of 2"),
      ("flour", "1 and three quarter cups"), ("butter", "three quarters of a cup"),
      ("sugar", "1 and a half cups"), ("eggs", "4 large")],
     ["Beat the butter with half a cup of sugar, work in one and a half cups of flour, and press the dough into a lined nine inch pan.",
      "Bake the crust at 350 degrees for 18 minutes until pale gold.",
      "Whisk the eggs with the remaining sugar, lemon juice, lemon zest, and the last quarter cup of flour.",
      "Pour the filling over the warm crust and bake 20 more minutes until set. Chill before dusting with powdered sugar and slicing."],
     []),

    ("r-lemon-chicken", "skillet lemon chicken", 4.4, 35, 4200,
     ["mediterranean"], ["gluten-free", "nut-free"],
     [("chicken breasts", "4 boneless"), ("lemon juice", "a third of a cup"),
      ("garlic", "3 cloves"), ("olive oil", "2 tablespoons"), ("oregano", "1 teaspoon")],
     ["Pound the chicken breasts to an even thickness and season them with salt and oregano.",
      "Sear the chicken in olive oil for five minutes per side until golden and cooked through. Move it to a plate.",
      "Soften the garlic in the same pan, pour in the lemon juice with a splash of water, and scrape up the browned bits.",
      "Simmer the sauce for two minutes, return the chicken, and spoon the pan juices over before serving."],
     []),

    ("r-lemonade", "fresh squeezed lemonade", 4.3, 15, 2600,
     ["american"], ["vegetarian", "vegan", "gluten-free", "dairy-free", "nut-free"],
     [("lemons", "6 large"), ("sugar", "1 cup"), ("water", "5 cups")],
     ["Dissolve the sugar in one cup of hot water to make a quick syrup.",
      "Roll the lemons firmly on the counter, then squeeze them; you want about one cup of juice.",
      "Stir the juice and syrup into the remaining cold water, taste, and adjust. Chill with plenty of ice."],
     []),

    ("r-guacamole", "chunky guacamole", 4.6, 15, 5100,
     ["mexican"], ["vegetarian", "vegan", "gluten-free", "dairy-free", "nut-free"],
     [("avocados", "3 ripe"), ("lime juice", "2 tablespoons"), ("onion", "a quarter, minced"),
      ("cilantro", "2 tablespoons, chopped"), ("tomatoes", "1, seeded and diced")],
     ["Halve the avocados, remove the pits, and scoop the flesh into a bowl.",
      "Mash with a fork, leaving some chunks. Stir in the lime juice right away so the dip stays green.",
      "Fold in the onion, cilantro, and tomato. Season with salt and serve within the hour."],
     []),

    ("r-chicken-tacos", "weeknight chicken tacos", 4.5, 30, 6000,
     ["mexican"], ["nut-free"],
     [("chicken thighs", "1 and a half pounds"), ("corn tortillas", "12"),
      ("chili powder", "1 tablespoon"), ("lime juice", "2 tablespoons"),
      ("onion", "half, diced"), ("cilantro", "a handful")],
     ["Toss the chicken with chili powder, salt, and half the lime juice.",
      "Sear the chicken over high heat for four minutes per side, rest it five minutes, then chop it roughly.",
      "Warm the corn tortillas in a dry pan until soft and lightly charred.",
      "Fill the tortillas with chicken, onion, and cilantro, and finish with the remaining lime juice."],
     [("how do i keep corn tortillas from cracking",
       "Warm them through before filling; a cold tortilla folds badly and splits.")]),

    ("r-burritos", "beef and bean burritos", 4.4, 35, 3700,
     ["mexican"], [],
     [("ground beef", "1 pound"), ("flour tortillas", "6 large"),
      ("black beans", "one 15-ounce can"), ("rice", "2 cups, cooked"),
      ("cheddar cheese", "1 and a half cups"), ("salsa", "1 cup")],
     ["Brown the ground beef with a pinch of salt and stir in the salsa.",
      "Warm the beans and fold them into the cooked rice.",
      "Pile beef, rice and beans, and cheddar cheese along the center of each tortilla.",
      "Fold in the sides, roll tightly, and toast seam side down in a dry skillet until golden."],
     []),

    ("r-fried-rice", "vegetable fried rice", 4.4, 25, 5900,
     ["chinese"], ["vegetarian", "dairy-free", "nut-free"],
     [("rice", "4 cups, day-old cooked"), ("eggs", "3 large"), ("soy sauce", "3 tablespoons"),
      ("peas", "1 cup"), ("carrots", "2, diced"), ("sesame oil", "1 tablespoon"),
      ("garlic", "2 cloves")],
     ["Scramble the eggs in a hot wok with a little oil and set them aside.",
      "Stir fry the garlic, carrots, and peas for three minutes over high heat.",
      "Break up the cold rice into the wok and toss constantly for four minutes. Tip: day-old rice fries better because it is drier.",
      "Return the eggs, splash in the soy sauce and sesame oil, and toss until every grain is coated."],
     [("can i use freshly cooked rice",
       "Fresh rice clumps; spread it on a tray to cool and dry for twenty minutes first.")]),

    ("r-stir-fry", "crisp vegetable stir fry", 4.3, 20, 3400,
     ["chinese"], ["vegetarian", "vegan", "dairy-free"],
     [("broccoli", "1 head, in florets"), ("bell peppers", "2, sliced"),
      ("soy sauce", "3 tablespoons"), ("ginger", "1 tablespoon, grated"),
      ("garlic", "3 cloves"), ("cornstarch", "1 teaspoon")],
     ["Stir the soy sauce, cornstarch, and a quarter cup of water into a quick sauce.",
      "Get a wok smoking hot and stir fry the broccoli and peppers for three minutes.",
      "Add the garlic and ginger for thirty seconds, pour in the sauce, and toss until it glazes the vegetables."],
     []),

    ("r-chicken-curry", "fragrant chicken curry", 4.6, 50, 6700,
     ["indian"], ["gluten-free", "nut-free"],
     [("chicken thighs", "2 pounds"), ("coconut milk", "one 14-ounce can"),
      ("curry powder", "2 tablespoons"), ("onion", "1 large"), ("garlic", "4 cloves"),
      ("ginger", "1 tablespoon"), ("tomatoes", "2, chopped")],
     ["Soften the onion in oil, then add the garlic, ginger, and curry powder and fry until fragrant.",
      "Add the chicken pieces and turn them until coated and lightly browned.",
      "Pour in the coconut milk and tomatoes, cover, and simmer for twenty-five minutes.",
      "Uncover and simmer ten more minutes until the sauce thickens. Serve over rice."],
     [("how can i make the curry less spicy",
       "Stir in extra coconut milk or a spoonful of yogurt to mellow the heat.")]),

    ("r-pad-thai", "shrimp pad thai", 4.5, 35, 4800,
     ["thai"], ["dairy-free"],
     [("rice noodles", "8 ounces"), ("shrimp", "half a pound"), ("eggs", "2 large"),
      ("fish sauce", "3 tablespoons"), ("peanuts", "a third of a cup, crushed"),
      ("lime juice", "2 tablespoons"), ("bean sprouts", "1 cup")],
     ["Soak the rice noodles in hot water until bendable but still firm, about eight minutes.",
      "Sear the shrimp in a hot wok for one minute per side and push them up the sides.",
      "Scramble the eggs in the center, then add the drained noodles, fish sauce, and lime juice and toss for two minutes.",
      "Fold in the bean sprouts, top with crushed peanuts, and serve with lime wedges."],
     []),

    ("r-greek-salad", "classic greek salad", 4.3, 15, 2900,
     ["mediterranean"], ["vegetarian", "gluten-free", "nut-free"],
     [("cucumbers", "2"), ("tomatoes", "4 ripe"), ("feta cheese", "6 ounces"),
      ("olives", "half a cup, kalamata"), ("red onion", "half, sliced"),
      ("olive oil", "a quarter cup"), ("oregano", "1 teaspoon")],
     ["Cut the cucumbers and tomatoes into chunky pieces and slice the red onion thin.",
      "Toss the vegetables with the olives, olive oil, oregano, and a pinch of salt.",
      "Top with thick slabs of feta cheese and serve immediately."],
     []),

    ("r-hummus", "silky homemade hummus", 4.5, 15, 4400,
     ["mediterranean"], ["vegetarian", "vegan", "gluten-free", "dairy-free"],
     [("chickpeas", "one 15-ounce can"), ("tahini", "a third of a cup"),
      ("lemon juice", "3 tablespoons"), ("garlic", "2 cloves"),
      ("olive oil", "2 tablespoons")],
     ["Blend the tahini and lemon juice for one minute until pale and creamy.",
      "Add the drained chickpeas, garlic, and a pinch of salt and blend, streaming in cold water until silky.",
      "Swirl onto a plate and finish with olive oil. Tip: peel the chickpeas for the smoothest texture."],
     []),

    ("r-bubble-tea", "brown sugar bubble tea", 4.4, 40, 5300,
     ["chinese"], ["vegetarian"],
     [("tapioca pearls", "half a cup"), ("black tea", "2 bags"),
      ("brown sugar", "a third of a cup"), ("milk", "1 cup")],
     ["Boil the tapioca pearls for twenty minutes, then rest them off the heat for another twenty, covered.",
      "Brew the black tea strong with both bags in one cup of hot water and let it cool.",
      "Simmer the drained pearls with the brown sugar and two tablespoons of water into a dark syrup.",
      "Swirl the syrupy pearls around a tall glass, add ice, and pour in the tea and milk."],
     [("why are my tapioca pearls hard in the middle",
       "They need the full resting time off the heat; cover the pot and wait the extra twenty minutes.")]),

    ("r-french-toast", "custardy french toast", 4.4, 20, 3200,
     ["french"], ["vegetarian"],
     [("bread", "8 thick slices, day-old"), ("eggs", "4 large"), ("milk", "1 cup"),
      ("cinnamon", "1 teaspoon"), ("butter", "2 tablespoons"),
      ("maple syrup", "for serving")],
     ["Whisk the eggs, milk, and cinnamon in a shallow dish.",
      "Soak each bread slice for twenty seconds per side; day-old bread drinks the custard without falling apart.",
      "Cook the slices in butter over medium heat for three minutes per side until golden. Serve with maple syrup."],
     []),

    ("r-cinnamon-rolls", "gooey cinnamon rolls", 4.8, 150, 7100,
     ["american"], ["vegetarian"],
     [("flour", "4 cups"), ("milk", "1 cup, warm"), ("yeast", "2 and a quarter teaspoons"),
      ("butter", "half a cup, softened"), ("brown sugar", "1 cup"),
      ("cinnamon", "2 tablespoons"), ("cream cheese", "4 ounces")],
     ["Dissolve the yeast in the warm milk, then knead it with the flour, a quarter cup of butter, and a pinch of salt into a soft dough. Rise for one hour.",
      "Roll the dough into a rectangle. Spread the remaining butter over it and dust evenly with the brown sugar and cinnamon.",
      "Roll it into a log, slice into twelve rounds, and rise again for thirty minutes in a buttered dish.",
      "Bake at 350 degrees for 25 minutes. Beat the cream cheese with a spoonful of milk and drizzle over the warm rolls."],
     []),

    ("r-apple-pie", "lattice apple pie", 4.7, 120, 6600,
     ["american"], ["vegetarian"],
     [("apples", "6 large, tart"), ("flour", "2 and a half cups"),
      ("butter", "1 cup, cold"), ("sugar", "three quarters of a cup"),
      ("cinnamon", "1 and a half teaspoons"), ("lemon juice", "1 tablespoon")],
     ["Cut the cold butter into the flour with a pinch of salt until pea-sized, then bring it together with ice water. Chill the dough for an hour.",
      "Slice the apples thin and toss them with sugar, cinnamon, and lemon juice.",
      "Roll out the bottom crust, fill it with the apples, and weave the remaining dough into a lattice on top.",
      "Bake at 425 degrees for 20 minutes, then at 350 for 40 more. Tip: set the pie on a hot baking sheet so the bottom crust crisps.",
      "Cool for at least two hours so the filling sets before slicing."],
     [("why is my pie filling watery",
       "The pie was cut too warm or the apples were very juicy; cool it fully and add a spoonful of flour to the filling next time.")]),

    ("r-omelette", "fluffy cheese omelette", 4.2, 10, 2200,
     ["french"], ["vegetarian", "gluten-free", "nut-free"],
     [("eggs", "3 large"), ("butter", "1 tablespoon"), ("cheddar cheese", "a third of a cup")],
     ["Beat the eggs with a pinch of salt until no streaks remain.",
      "Melt the butter in a nonstick pan over medium heat and pour in the eggs, pulling the set edges toward the center as they cook.",
      "When the top is barely wet, scatter the cheddar cheese over one half, fold, and slide onto a plate."],
     []),

    ("r-garlic-bread", "cheesy garlic bread", 4.4, 20, 3500,
     ["italian"], ["vegetarian"],
     [("baguette", "1 large"), ("butter", "half a cup, softened"),
      ("garlic", "4 cloves, minced"), ("mozzarella cheese", "1 cup"),
      ("parsley", "2 tablespoons")],
     ["Split the baguette lengthwise and set it cut side up on a baking sheet.",
      "Mash the butter with the garlic and parsley and spread it edge to edge.",
      "Top with the mozzarella cheese and bake at 400 degrees for ten minutes, broiling the last minute for color."],
     []),

    ("r-pancakes", "diner style pancakes", 4.5, 20, 5000,
     ["american"], ["vegetarian"],
     [("flour", "2 cups"), ("milk", "1 and three quarter cups"), ("eggs", "2 large"),
      ("baking powder", "4 teaspoons"), ("sugar", "2 tablespoons"), ("butter", "for the griddle")],
     ["Whisk the dry ingredients in one bowl and the milk and eggs in another.",
      "Combine the two with a few big strokes; small lumps are fine and keep the pancakes tender.",
      "Ladle onto a buttered griddle over medium heat. Flip when the bubbles on top pop and stay open.",
      "Hold finished pancakes in a warm oven while you cook the rest."],
     []),
]

# (id, title, rating, minutes, popularity, steps, faqs)
DIY_TASKS = [
    ("d-wash-car", "how to wash a car", 4.5, 45, 8200,
     ["Park the car in the shade and rinse it top to bottom to knock off loose dirt.",
      "Fill one bucket with soapy water and another with plain rinse water. Wash one panel at a time with a clean mitt, starting from the roof. Tip: two buckets keep grit out of the soap so you do not scratch the paint.",
      "Rinse each panel before the soap dries, working your way down the car.",
      "Dry the whole car with microfiber towels to prevent water spots, then clean the wheels last with a separate mitt."],
     [("should i wash the wheels first or last",
       "Wash them last with a separate mitt; wheel grime is the most abrasive dirt on the car.")]),

    ("d-wash-windows", "how to wash windows without streaks", 4.2, 30, 2700,
     ["Mix two cups of water with a quarter cup of white vinegar and a drop of dish soap in a spray bottle.",
      "Spray the glass generously and loosen grime with a soft cloth.",
      "Pull a squeegee across the glass in overlapping strokes, wiping the blade between passes. Tip: wash windows on a cloudy day because direct sun dries the cleaner into streaks."],
     []),

    ("d-clean-grout", "how to clean grout between tiles", 4.1, 40, 3100,
     ["Make a thick paste of baking soda and water and spread it along the grout lines.",
      "Spray the paste with vinegar and let it fizz for five minutes.",
      "Scrub the lines with a stiff grout brush or an old toothbrush and wipe the tiles clean.",
      "Rinse with warm water and buff dry. Tip: seal the grout once it is fully dry to keep stains from coming back."],
     [("will this work on colored grout",
       "Test a hidden spot first; vinegar can lighten some colored grouts.")]),

    ("d-clean-microwave", "how to clean a microwave", 4.3, 15, 4300,
     ["Fill a microwave-safe bowl with a cup of water and a sliced lemon.",
      "Run the microwave on high for three minutes so the steam loosens the baked-on food, then leave the door shut for two more.",
      "Wipe the walls and turntable with a sponge; the grime lifts off with almost no scrubbing."],
     []),

    ("d-clean-floors", "how to clean hardwood floors", 4.4, 35, 3800,
     ["Vacuum or dust mop the floor to pick up grit that would scratch the finish.",
      "Mix a few drops of ph-neutral wood floor cleaner into a bucket of warm water.",
      "Damp mop with the grain, wringing the mop until it is nearly dry. Tip: standing water is the enemy of wood; never soak the boards.",
      "Buff dry with a microfiber towel for extra shine."],
     []),

    ("d-clean-shoes", "how to clean white shoes", 4.2, 25, 5200,
     ["Knock the soles together outside and brush off loose dirt with a dry brush.",
      "Scrub the uppers with a paste of baking soda and a little dish soap, using an old toothbrush.",
      "Wipe clean with a damp cloth and stuff the shoes with paper towels.",
      "Air dry away from direct heat. Tip: sunlight can yellow white rubber, so dry them in the shade."],
     []),

    ("d-clean-coffee-maker", "how to clean a coffee maker", 4.3, 30, 2900,
     ["Empty the carafe and basket and discard the old filter.",
      "Fill the reservoir with equal parts white vinegar and water and run half a brew cycle, then pause the machine for thirty minutes.",
      "Finish the cycle, then run two full cycles of plain water to rinse out the vinegar taste.",
      "Wash the carafe and basket with warm soapy water and wipe the machine down."],
     [("how often should i descale the machine",
       "Once a month with daily use, or whenever brewing slows noticeably.")]),

    ("d-clean-leather", "how to clean leather car seats", 4.1, 40, 2000,
     ["Vacuum the seats and crevices with a soft brush attachment.",
      "Wipe the leather with a barely damp cloth and a dedicated leather cleaner, working in small sections.",
      "Buff dry and follow with a leather conditioner to keep the seats from cracking."],
     []),

    ("d-remove-spray-paint", "how to remove spray paint from brick", 4.0, 60, 2400,
     ["Soak the painted brick with warm soapy water and scrub with a stiff nylon brush.",
      "Apply a paint stripper gel rated for masonry over any paint that remains and leave it on per the label.",
      "Scrape the softened paint away with a plastic scraper and rinse the wall.",
      "Repeat on stubborn spots. Tip: a pressure washer on a low fan setting clears the last shadows without chewing up the brick."],
     [("will a wire brush damage the brick",
       "Yes, wire bristles gouge soft brick; stay with stiff nylon.")]),

    ("d-remove-rust", "how to remove rust from metal tools", 4.2, 70, 2800,
     ["Soak the rusty tools overnight in white vinegar.",
      "Scrub the loosened rust off with steel wool or a wire brush.",
      "Rinse, dry completely, and wipe the metal with a thin coat of oil to keep the rust from returning."],
     []),

    ("d-remove-wallpaper", "how to remove wallpaper", 3.9, 180, 2100,
     ["Pull off the top vinyl layer dry, starting from a bottom corner.",
      "Score the remaining backing lightly and soak it with hot water and a little fabric softener.",
      "Scrape the softened backing off with a wide putty knife, re-wetting as you go.",
      "Wash the bare wall with soapy water to remove leftover adhesive before painting."],
     []),

    ("d-remove-stains", "how to remove carpet stains", 4.1, 25, 3600,
     ["Blot up as much of the spill as possible with a dry towel; never rub.",
      "Spray the spot with a mix of one tablespoon dish soap, one tablespoon white vinegar, and two cups of warm water.",
      "Blot from the outside of the stain inward with a clean cloth, repeating until the stain lifts.",
      "Rinse with a damp cloth and lay a dry towel over the spot with a weight to wick out the moisture."],
     []),

    ("d-remove-screw", "how to remove a stripped screw", 4.0, 20, 3300,
     ["Press a wide rubber band over the screw head and drive slowly with firm downward pressure.",
      "If that fails, cut a fresh slot across the head with a rotary tool and use a flathead driver.",
      "As a last resort, drill a small pilot into the head and back it out with a screw extractor bit."],
     []),

    ("d-fix-faucet", "how to fix a leaky faucet", 4.4, 50, 6100,
     ["Shut off the water at the valves under the sink and open the faucet to drain the lines.",
      "Plug the drain so small parts cannot fall in, then take the handle off and unscrew the cartridge or stem.",
      "Replace the worn washer and o-rings, or swap in a matching new cartridge. Tip: bring the old cartridge to the store to match it exactly.",
      "Reassemble the faucet, open the valves slowly, and check for drips."],
     [("the faucet still drips after a new washer, what now",
       "The valve seat is likely pitted; dress it with a seat wrench or replace the cartridge entirely.")]),

    ("d-fix-door", "how to fix a squeaky door hinge", 4.3, 10, 4700,
     ["Swing the door to find which hinge squeaks.",
      "Tap the hinge pin up and out with a nail and hammer, one hinge at a time.",
      "Coat the pin with a little petroleum jelly or silicone lubricant and tap it back in.",
      "Swing the door a few times to work the lubricant through the knuckles and wipe any excess."],
     []),

    ("d-fix-toilet", "how to fix a running toilet", 4.2, 35, 5400,
     ["Lift the tank lid and watch a flush to see whether the flapper, float, or fill valve is misbehaving.",
      "If the flapper does not seal, shut the water, drain the tank, and swap in a matching flapper.",
      "If the water level creeps over the overflow tube, lower the float arm or adjust the fill valve screw.",
      "Turn the water back on and confirm the tank stops filling an inch below the overflow tube."],
     []),

    ("d-fix-bike-tire", "how to fix a flat bike tire", 4.5, 30, 3900,
     ["Flip the bike, release the brake, and pop the wheel off.",
      "Lever the tire bead over the rim and pull out the tube.",
      "Find the puncture by inflating the tube and listening, then rough the spot and glue on a patch.",
      "Check the tire inside for thorns, reseat the tube and bead, and inflate to the pressure printed on the sidewall."],
     []),

    ("d-patch-drywall", "how to patch a hole in drywall", 4.3, 90, 4500,
     ["Cut a neat rectangle around the damage and a fresh drywall patch slightly larger than the hole.",
      "Screw a wood backing strip inside the wall and fasten the patch to it.",
      "Tape the seams and spread three thin coats of joint compound, letting each coat dry.",
      "Sand smooth, prime, and paint to blend with the wall."],
     []),

    ("d-paint-room", "how to paint a room", 4.6, 240, 8800,
     ["Move the furniture to the center and cover everything with drop cloths.",
      "Wash the walls, fill holes with spackle, and sand the patches smooth.",
      "Tape the trim, then cut in the edges with a brush before rolling the walls in a w pattern. Tip: keep a wet edge to avoid lap marks.",
      "Roll two thin coats rather than one thick one, letting the first dry fully.",
      "Pull the tape while the final coat is barely tacky for the cleanest line."],
     [("do i need primer on previously painted walls",
       "Only over patches, stains, or when making a big color change; spot-prime the repairs at minimum.")]),

    ("d-paint-cabinets", "how to paint kitchen cabinets", 4.4, 300, 5100,
     ["Remove the doors and hardware and label each door with its location.",
      "Degrease every surface, sand lightly, and wipe away the dust.",
      "Brush a bonding primer on the frames and doors and let it cure.",
      "Spray or roll two thin coats of cabinet enamel, sanding lightly between coats.",
      "Rehang the doors once the paint has cured for at least a day."],
     []),

    ("d-paint-furniture", "how to paint wood furniture", 4.2, 180, 3000,
     ["Clean the piece and remove drawers, doors, and hardware.",
      "Sand all surfaces with 120 grit, then 220 grit, and vacuum off the dust.",
      "Prime with a stain-blocking primer, especially over knots.",
      "Apply two coats of furniture paint with a foam roller, sanding lightly between coats, and finish with a clear topcoat for durability."],
     []),

    ("d-install-fan", "how to install a ceiling fan", 4.3, 120, 4600,
     ["Kill the power at the breaker and confirm it is off with a voltage tester.",
      "Take down the old fixture and check that the electrical box is fan-rated.",
      "Mount the fan bracket, hang the motor, and connect the wires: black to black, white to white, ground to green. Tip: hang the motor on the bracket hook so both hands stay free for wiring.",
      "Attach the blades and canopy, restore power, and test every speed setting."],
     [("my fan wobbles after installation, how do i fix it",
       "Tighten every blade screw first, then use the balancing kit clip to find the heavy blade.")]),

    ("d-install-shelf", "how to install a floating shelf", 4.2, 45, 3400,
     ["Find the studs with a stud finder and mark them with painter's tape.",
      "Level the hidden bracket against the marks and drill pilot holes into the studs.",
      "Lag-screw the bracket to the studs; use rated anchors only where a stud cannot line up.",
      "Slide the shelf over the bracket rods and check it with a level before loading it."],
     []),

    ("d-hang-pictures", "how to hang pictures evenly", 4.1, 30, 2600,
     ["Lay the frames on craft paper, trace them, and cut out templates.",
      "Tape the templates to the wall and shuffle them until the arrangement feels balanced.",
      "Mark each hook location through the paper, measuring the hanger offset on the frame backs.",
      "Drive the hooks through the marks, tear away the paper, and hang the frames. Tip: a bit of painter's tape over drywall keeps it from crumbling when you nail."],
     []),

    ("d-unclog-drain", "how to unclog a slow drain", 4.2, 25, 5600,
     ["Pull out the stopper and fish out hair with a plastic drain snake.",
      "Pour half a cup of baking soda down the drain, chase it with half a cup of vinegar, and plug the drain while it fizzes for ten minutes.",
      "Flush with a kettle of boiling water. Repeat once for stubborn clogs.",
      "If it still drains slowly, clear the trap under the sink with a bucket beneath it."],
     [("is chemical drain cleaner safe for old pipes",
       "Avoid it; repeated caustic cleaners attack old metal traps and the clog usually returns.")]),

    ("d-caulk-sink", "how to caulk a kitchen sink", 4.0, 40, 1800,
     ["Cut away every bit of the old caulk with a plastic razor and wipe the joint with rubbing alcohol.",
      "Tape both sides of the seam for a crisp line.",
      "Run a steady bead of kitchen-rated silicone, then tool it smooth with a wet finger in one pass.",
      "Pull the tape right away and let the caulk cure for a day before using the sink."],
     []),

    ("d-organize-closet", "how to organize a closet", 4.3, 120, 3700,
     ["Empty the closet completely and sort everything into keep, donate, and toss piles.",
      "Group the keepers by type and season before anything goes back.",
      "Store off-season items up high in labeled bins and keep daily items at eye level.",
      "Finish with matching hangers; the uniformity alone makes the closet read as organized."],
     []),

    ("d-sharpen-knife", "how to sharpen a kitchen knife", 4.5, 20, 4000,
     ["Soak a combination whetstone in water for ten minutes.",
      "Hold the blade at about fifteen degrees and sweep it across the coarse side, alternating sides evenly.",
      "Flip to the fine side and repeat with lighter strokes to polish the edge.",
      "Finish on a honing rod and test by slicing a sheet of paper. Tip: a marker line on the edge shows you if your angle is holding."],
     []),

    ("d-polish-furniture", "how to polish wood furniture", 4.0, 30, 1700,
     ["Dust the piece thoroughly with a barely damp microfiber cloth.",
      "Work a small amount of furniture polish or paste wax in the direction of the grain.",
      "Let it haze for five minutes, then buff to a shine with a clean cloth."],
     []),

    ("d-grow-tomatoes", "how to grow tomatoes indoors", 4.4, 90, 3100,
     ["Fill six inch pots with seed-starting mix and plant two seeds a quarter inch deep in each.",
      "Keep the pots on a sunny south window or under a grow light for fourteen hours a day.",
      "Water whenever the top inch of soil dries out and thin to the strongest seedling per pot.",
      "Transplant to a five gallon container once the plants are six inches tall and feed every two weeks. Tip: shake the flowering stems gently each morning to pollinate indoor plants."],
     [("why are the leaves turning yellow",
       "Usually overwatering or hungry soil; let the top inch dry and start a regular feeding schedule.")]),

    ("d-succulent", "how to care for a succulent", 4.3, 15, 4900,
     ["Pot the succulent in a container with a drainage hole and gritty cactus soil.",
      "Give it the brightest window you have; leggy stretched growth means not enough light.",
      "Water deeply but only when the soil is bone dry, roughly every two weeks.",
      "Empty the saucer after watering. Tip: wrinkled leaves mean thirsty, mushy leaves mean drowned."],
     []),

    ("d-birdhouse", "how to build a birdhouse", 4.5, 150, 2800,
     ["Cut the six panels from a cedar fence board: front, back, two sides, floor, and roof.",
      "Drill a inch and a half entrance hole in the front panel and a few small vents near the top of the sides.",
      "Screw the box together with the floor recessed a quarter inch, leaving one side hinged for cleaning.",
      "Mount the house eight feet up a post facing away from the afternoon sun. Tip: skip the perch below the hole; it only helps predators."],
     [("what size entrance hole attracts wrens",
       "An inch and an eighth keeps wrens happy and house sparrows out.")]),

    ("d-candle", "how to make a scented candle", 4.2, 60, 3500,
     ["Melt soy wax flakes in a pouring pitcher set inside a pot of simmering water.",
      "Glue a wick to the bottom center of a heatproof jar and prop it upright with clothespins.",
      "Stir fragrance oil into the wax once it cools to 185 degrees, about one ounce per pound of wax.",
      "Pour the wax at 135 degrees, let it cure for two days, and trim the wick to a quarter inch."],
     []),

    ("d-knit-scarf", "how to knit a simple scarf", 4.4, 600, 2300,
     ["Cast on thirty stitches with chunky yarn on size ten needles.",
      "Knit every row in garter stitch, keeping your tension relaxed and even.",
      "Keep going until the scarf reaches about sixty inches. Tip: count your stitches every few rows so edges stay straight.",
      "Cast off loosely, weave in the yarn ends, and block the scarf flat with a damp towel."],
     []),

    ("d-frame-poster", "how to frame a poster", 4.0, 25, 1600,
     ["Buy a frame matching the poster's standard size, or order a custom mat for odd sizes.",
      "Clean the inside of the glass and let it dry streak free.",
      "Center the poster against the mat or backing board and secure it with archival tape at the top only.",
      "Reassemble the frame, point the hardware, and hang it from two hooks so it stays level."],
     []),

    ("d-compost", "how to start a compost bin", 4.3, 60, 2500,
     ["Pick a shaded corner of the yard and set up a bin with good airflow.",
      "Layer brown material like dry leaves with green material like vegetable scraps, roughly three parts brown to one part green.",
      "Keep the pile as damp as a wrung-out sponge and turn it with a fork every week or two.",
      "Harvest dark, crumbly compost from the bottom in two to four months."],
     []),

    ("d-doorknob", "how to fix a loose door knob", 3.9, 15, 1500,
     ["Find the small set screw on the knob's neck or pop off the decorative rose to expose the mounting screws.",
      "Hold the outside knob steady and tighten the screws until the wobble disappears.",
      "If the latch sticks, loosen the screws a half turn and test until the knob turns freely."],
     []),

    ("d-dishwasher", "how to clean a dishwasher", 4.1, 30, 2200,
     ["Pull the bottom rack and clear food debris from the drain screen.",
      "Remove the filter, rinse it under hot water, and scrub it with a soft brush.",
      "Run the empty machine on hot with a cup of white vinegar standing upright on the top rack.",
      "Sprinkle a cup of baking soda on the floor of the tub and run a short hot cycle to deodorize."],
     []),

    ("d-mirror", "how to hang a heavy mirror", 4.2, 45, 1900,
     ["Weigh the mirror and buy hangers rated for at least double that weight.",
      "Locate studs behind the wall where the mirror will hang.",
      "Drive the hangers into studs, or use heavy-duty toggle anchors when studs do not line up.",
      "Hang the mirror on two points, check level, and add felt pads at the bottom corners to protect the wall."],
     []),

    ("d-recipe-cards", "how to organize recipe cards", 3.8, 40, 900,
     ["Gather every loose recipe card, clipping, and printout into one pile.",
      "Sort them into broad categories like mains, sides, and sweets.",
      "File the cards into a divided box with labeled tabs, copying any odd-sized clippings onto fresh cards."],
     []),

    ("d-recipe-binder", "how to make a recipe binder", 3.9, 50, 1100,
     ["Pick a sturdy three ring binder and a pack of plastic sheet protectors.",
      "Slide each printed page into a protector so spills wipe right off.",
      "Add divider tabs by course and keep a few empty protectors up front for new finds."],
     []),

    ("d-recipe-scrapbook", "how to make a recipe scrapbook", 3.7, 90, 700,
     ["Choose an acid-free scrapbook album and archival glue sticks.",
      "Lay out one dish per spread, pairing the card with a photo of the finished plate.",
      "Decorate the margins and note who gave you each dish so the stories survive."],
     []),

    ("d-rice-cooker", "how to clean a rice cooker", 4.0, 20, 1300,
     ["Unplug the cooker and let it cool completely.",
      "Wash the inner pot and lid in warm soapy water; never submerge the base.",
      "Wipe the heating plate with a damp cloth, removing stuck starch with a little vinegar."],
     []),

    ("d-cheese-board", "how to build a cheese board", 4.3, 120, 1600,
     ["Cut a hardwood plank to size and round the corners with a jigsaw.",
      "Sand through the grits to 220 until the surface feels like glass.",
      "Finish with food-safe mineral oil, letting it soak in overnight. Tip: re-oil the board monthly to keep it from drying out."],
     []),

    ("d-cake-stand", "how to make a cake stand", 4.1, 60, 800,
     ["Find a sturdy plate and a candlestick or short vase for the pedestal.",
      "Scuff both gluing surfaces lightly with sandpaper and clean off the dust.",
      "Bond them with a strong epoxy, center the plate with a quick measure, and let it cure for a day."],
     []),

    ("d-tea-kettle", "how to clean a tea kettle", 4.0, 25, 1000,
     ["Fill the kettle halfway with equal parts water and white vinegar.",
      "Boil the mixture, switch off the heat, and let it sit for an hour.",
      "Pour it out, scrub any loose scale, and boil a round of fresh water before the next brew."],
     []),

    ("d-bread-machine", "how to fix a bread machine", 3.8, 45, 600,
     ["Check that the kneading paddle spins freely and seats fully on its shaft.",
      "If the belt slips, open the base and tighten or replace the drive belt.",
      "Clean dried dough from the pan socket; a poor connection there stops the heating cycle."],
     []),

    ("d-chicken-coop", "how to build a chicken coop", 4.5, 480, 2900,
     ["Frame a four by eight base on skids so the coop can be moved.",
      "Build the walls with a door for you and a small ramp door for the birds.",
      "Add roosting bars high in the back and one nesting box per three hens.",
      "Wrap the run in half-inch hardware mesh, burying it a foot deep. Tip: chicken wire keeps birds in but does not keep raccoons out; use hardware mesh."],
     []),

    ("d-chicken-wire-art", "how to make chicken wire art", 3.9, 80, 500,
     ["Sketch your shape on paper and bend a frame from heavy fence wire.",
      "Mold the chicken wire over the frame with gloved hands, tucking the cut ends inward.",
      "Spray the finished piece with outdoor enamel and hang it with picture wire."],
     []),

    ("d-lemon-battery", "how to make a lemon battery", 4.2, 30, 2100,
     ["Roll four lemons firmly on the table to loosen the juice inside.",
      "Push a zinc nail and a copper coin into each lemon, a couple of inches apart.",
      "Wire the lemons in series, copper to zinc, and connect the ends to a small LED.",
      "Dim the room to spot the faint glow. Tip: warm lemons push a little more current than cold ones."],
     []),
]
