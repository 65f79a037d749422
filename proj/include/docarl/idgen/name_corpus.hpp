#pragma once

#include <array>
#include <string_view>

namespace docarl::corpus {

inline constexpr std::array<std::string_view, 583> kFirstNames{
    "Aaron", "Abigail", "Adam", "Adrian", "Aidan", "Alan", "Albert", "Alejandro", "Alexa",
    "Alexander", "Alexis", "Alfred", "Alice", "Alicia", "Allison", "Alma", "Alvin", "Amanda",
    "Amber", "Amelia", "Amy", "Andre", "Andrea", "Andrew", "Angela", "Angelica", "Anita", "Ann",
    "Anna", "Anne", "Annie", "Anthony", "Antonio", "April", "Arthur", "Ashley", "Audrey",
    "Austin", "Ava", "Barbara", "Barry", "Beatrice", "Becky", "Benjamin", "Bernard", "Beth",
    "Betty", "Beverly", "Bill", "Billy", "Blake", "Bobby", "Bonnie", "Brad", "Bradley",
    "Brandon", "Brenda", "Brent", "Brett", "Brian", "Bridget", "Brittany", "Brooke", "Bruce",
    "Bryan", "Caleb", "Calvin", "Cameron", "Carl", "Carla", "Carlos", "Carmen", "Carol",
    "Caroline", "Carrie", "Casey", "Catherine", "Cecil", "Cedric", "Chad", "Charles",
    "Charlotte", "Chelsea", "Cheryl", "Chloe", "Chris", "Christian", "Christina", "Christine",
    "Christopher", "Cindy", "Claire", "Clara", "Clarence", "Claude", "Clayton", "Clifford",
    "Clinton", "Cody", "Colin", "Connie", "Connor", "Corey", "Courtney", "Craig", "Crystal",
    "Curtis", "Cynthia", "Daisy", "Dale", "Dallas", "Dan", "Dana", "Daniel", "Danielle",
    "Danny", "Darlene", "Darren", "Darryl", "David", "Dawn", "Dean", "Debbie", "Deborah",
    "Denise", "Dennis", "Derek", "Derrick", "Desiree", "Destiny", "Devin", "Diana", "Diane",
    "Dolores", "Dominic", "Don", "Donald", "Donna", "Doris", "Dorothy", "Douglas", "Drew",
    "Duane", "Dustin", "Dwayne", "Dylan", "Earl", "Eddie", "Edgar", "Edith", "Edna", "Edward",
    "Edwin", "Eileen", "Elaine", "Eleanor", "Elijah", "Elizabeth", "Ella", "Ellen", "Elliot",
    "Elsie", "Emily", "Emma", "Eric", "Erica", "Erik", "Erin", "Ernest", "Esther", "Ethan",
    "Ethel", "Eugene", "Eva", "Evan", "Evelyn", "Faith", "Felicia", "Felix", "Fernando",
    "Florence", "Floyd", "Frances", "Francis", "Frank", "Franklin", "Fred", "Frederick",
    "Gabriel", "Gail", "Gary", "Gavin", "Gene", "Geneva", "George", "Georgia", "Gerald",
    "Geraldine", "Gilbert", "Gina", "Gladys", "Glen", "Glenda", "Gloria", "Gordon", "Grace",
    "Grant", "Greg", "Gregory", "Gwendolyn", "Hailey", "Hannah", "Harold", "Harriet", "Harry",
    "Harvey", "Hazel", "Heather", "Hector", "Heidi", "Helen", "Henry", "Herbert", "Herman",
    "Holly", "Howard", "Hugh", "Hunter", "Ian", "Irene", "Isaac", "Isabel", "Isabella", "Ivan",
    "Jack", "Jackie", "Jackson", "Jacob", "Jacqueline", "Jaime", "Jake", "James", "Jamie",
    "Jane", "Janet", "Janice", "Jared", "Jasmine", "Jason", "Javier", "Jay", "Jean", "Jeanette",
    "Jeff", "Jeffery", "Jeffrey", "Jenna", "Jennifer", "Jenny", "Jeremiah", "Jeremy", "Jerome",
    "Jerry", "Jesse", "Jessica", "Jesus", "Jill", "Jim", "Jimmy", "Jo", "Joan", "Joanna",
    "Joanne", "Joe", "Joel", "Johanna", "John", "Johnny", "Jon", "Jonathan", "Jordan", "Jorge",
    "Jose", "Joseph", "Josephine", "Joshua", "Joy", "Joyce", "Juan", "Juanita", "Judith",
    "Judy", "Julia", "Julian", "Julie", "June", "Justin", "Kaitlyn", "Karen", "Karl",
    "Katherine", "Kathleen", "Kathryn", "Kathy", "Katie", "Kayla", "Keith", "Kelly", "Kelsey",
    "Ken", "Kendra", "Kenneth", "Kent", "Kevin", "Kim", "Kimberly", "Kirk", "Kristen",
    "Kristin", "Kurt", "Kyle", "Lance", "Larry", "Laura", "Lauren", "Laurie", "Lawrence",
    "Leah", "Lee", "Leo", "Leon", "Leonard", "Leroy", "Leslie", "Lester", "Lewis", "Lillian",
    "Lily", "Linda", "Lindsay", "Lisa", "Lloyd", "Logan", "Lois", "Lonnie", "Lori", "Lorraine",
    "Louis", "Louise", "Lucas", "Lucille", "Lucy", "Luis", "Luke", "Lydia", "Lynn", "Mabel",
    "Madison", "Mae", "Maria", "Marian", "Marie", "Marilyn", "Mario", "Marion", "Marjorie",
    "Mark", "Marlene", "Marsha", "Martha", "Martin", "Marvin", "Mary", "Mason", "Mathew",
    "Matthew", "Maureen", "Maurice", "Max", "Megan", "Melanie", "Melissa", "Melvin", "Mia",
    "Michael", "Michele", "Michelle", "Miguel", "Mike", "Mildred", "Milton", "Mindy", "Miranda",
    "Misty", "Mitchell", "Molly", "Monica", "Morgan", "Nancy", "Naomi", "Natalie", "Nathan",
    "Nathaniel", "Neil", "Nicholas", "Nicole", "Noah", "Nora", "Norma", "Norman", "Olga",
    "Olivia", "Oscar", "Owen", "Paige", "Pamela", "Patricia", "Patrick", "Paul", "Paula",
    "Pauline", "Pearl", "Pedro", "Peggy", "Penny", "Peter", "Philip", "Phillip", "Phyllis",
    "Preston", "Priscilla", "Rachel", "Ralph", "Ramon", "Randall", "Randy", "Ray", "Raymond",
    "Rebecca", "Regina", "Reginald", "Renee", "Rhonda", "Ricardo", "Richard", "Rick", "Ricky",
    "Riley", "Rita", "Robert", "Roberta", "Roberto", "Robin", "Rodney", "Roger", "Roland",
    "Ronald", "Ronnie", "Rosa", "Rose", "Rosemary", "Ross", "Roy", "Ruby", "Russell", "Ruth",
    "Ryan", "Sabrina", "Sally", "Samantha", "Samuel", "Sandra", "Sara", "Sarah", "Scott",
    "Sean", "Seth", "Shane", "Shannon", "Sharon", "Shawn", "Sheila", "Shelby", "Shelly",
    "Sherry", "Shirley", "Sidney", "Sonia", "Sophia", "Stacy", "Stanley", "Stella", "Stephanie",
    "Stephen", "Steve", "Steven", "Sue", "Susan", "Suzanne", "Sydney", "Sylvia", "Tamara",
    "Tammy", "Tanya", "Tara", "Taylor", "Ted", "Terry", "Thelma", "Theodore", "Theresa",
    "Thomas", "Tiffany", "Tim", "Timothy", "Tina", "Todd", "Tom", "Tommy", "Tony", "Tracy",
    "Travis", "Trevor", "Troy", "Tyler", "Valerie", "Vanessa", "Vernon", "Veronica", "Vicki",
    "Victor", "Victoria", "Vincent", "Viola", "Violet", "Virginia", "Vivian", "Wade", "Walter",
    "Wanda", "Warren", "Wayne", "Wendy", "Wesley", "Whitney", "Willard", "William", "Willie",
    "Wilma", "Yolanda", "Yvonne", "Zachary", "Zoe", "Abel", "Agnes", "Alberto", "Alexandra",
    "Alison", "Alyssa", "Amos", "Ana", "Angel", "Arlene", "Armando", "Arnold", "Beulah",
    "Blanche", "Bob", "Boyd", "Brandy", "Byron", "Candace", "Carlton", "Cassandra", "Cecilia",
    "Celia", "Chester", "Clyde", "Colleen", "Constance", "Cora", "Darla", "Delia",
};

inline constexpr std::array<std::string_view, 622> kLastNames{
    "Smith", "Johnson", "Williams", "Brown", "Jones", "Garcia", "Miller", "Davis", "Rodriguez",
    "Martinez", "Hernandez", "Lopez", "Gonzalez", "Wilson", "Anderson", "Thomas", "Taylor",
    "Moore", "Jackson", "Martin", "Lee", "Perez", "Thompson", "White", "Harris", "Sanchez",
    "Clark", "Ramirez", "Lewis", "Robinson", "Walker", "Young", "Allen", "King", "Wright",
    "Scott", "Torres", "Nguyen", "Hill", "Flores", "Green", "Adams", "Nelson", "Baker", "Hall",
    "Rivera", "Campbell", "Mitchell", "Carter", "Roberts", "Gomez", "Phillips", "Evans",
    "Turner", "Diaz", "Parker", "Cruz", "Edwards", "Collins", "Reyes", "Stewart", "Morris",
    "Morales", "Murphy", "Cook", "Rogers", "Gutierrez", "Ortiz", "Morgan", "Cooper", "Peterson",
    "Bailey", "Reed", "Kelly", "Howard", "Ramos", "Kim", "Cox", "Ward", "Richardson", "Watson",
    "Brooks", "Chavez", "Wood", "James", "Bennett", "Gray", "Mendoza", "Ruiz", "Hughes",
    "Price", "Alvarez", "Castillo", "Sanders", "Patel", "Myers", "Long", "Ross", "Foster",
    "Jimenez", "Powell", "Jenkins", "Perry", "Russell", "Sullivan", "Bell", "Coleman", "Butler",
    "Henderson", "Barnes", "Gonzales", "Fisher", "Vasquez", "Simmons", "Romero", "Jordan",
    "Patterson", "Alexander", "Hamilton", "Graham", "Reynolds", "Griffin", "Wallace", "Moreno",
    "West", "Cole", "Hayes", "Bryant", "Herrera", "Gibson", "Ellis", "Tran", "Medina",
    "Aguilar", "Stevens", "Murray", "Ford", "Castro", "Marshall", "Owens", "Harrison",
    "Fernandez", "McDonald", "Woods", "Washington", "Kennedy", "Wells", "Vargas", "Henry",
    "Chen", "Freeman", "Webb", "Tucker", "Guzman", "Burns", "Crawford", "Olson", "Simpson",
    "Porter", "Hunter", "Gordon", "Mendez", "Silva", "Shaw", "Snyder", "Mason", "Dixon",
    "Munoz", "Hunt", "Hicks", "Holmes", "Palmer", "Wagner", "Black", "Robertson", "Boyd",
    "Rose", "Stone", "Salazar", "Fox", "Warren", "Mills", "Meyer", "Rice", "Schmidt", "Garza",
    "Daniels", "Ferguson", "Nichols", "Stephens", "Soto", "Weaver", "Ryan", "Gardner", "Payne",
    "Grant", "Dunn", "Kelley", "Spencer", "Hawkins", "Arnold", "Pierce", "Vazquez", "Hansen",
    "Peters", "Santos", "Hart", "Bradley", "Knight", "Elliott", "Cunningham", "Duncan",
    "Armstrong", "Hudson", "Carroll", "Lane", "Riley", "Andrews", "Alvarado", "Ray", "Delgado",
    "Berry", "Perkins", "Hoffman", "Johnston", "Matthews", "Pena", "Richards", "Contreras",
    "Willis", "Carpenter", "Lawrence", "Sandoval", "Guerrero", "George", "Chapman", "Rios",
    "Estrada", "Ortega", "Watkins", "Greene", "Nunez", "Wheeler", "Valdez", "Harper", "Burke",
    "Larson", "Santiago", "Maldonado", "Morrison", "Franklin", "Carlson", "Austin", "Dominguez",
    "Carr", "Lawson", "Jacobs", "Obrien", "Lynch", "Singh", "Vega", "Bishop", "Montgomery",
    "Oliver", "Jensen", "Harvey", "Williamson", "Gilbert", "Dean", "Sims", "Espinoza", "Howell",
    "Li", "Wong", "Reid", "Hanson", "Le", "McCoy", "Garrett", "Burton", "Fuller", "Wang",
    "Weber", "Welch", "Rojas", "Lucas", "Marquez", "Fields", "Park", "Yang", "Little", "Banks",
    "Padilla", "Day", "Walsh", "Bowman", "Schultz", "Luna", "Fowler", "Mejia", "Davidson",
    "Acosta", "Brewer", "May", "Holland", "Juarez", "Newman", "Pearson", "Curtis", "Cortez",
    "Douglas", "Schneider", "Joseph", "Barrett", "Navarro", "Figueroa", "Keller", "Avila",
    "Wade", "Molina", "Stanley", "Hopkins", "Campos", "Barnett", "Bates", "Chambers",
    "Caldwell", "Beck", "Lambert", "Miranda", "Byrd", "Craig", "Ayala", "Lowe", "Frazier",
    "Powers", "Neal", "Leonard", "Gregory", "Carrillo", "Sutton", "Fleming", "Rhodes",
    "Shelton", "Schwartz", "Norris", "Jennings", "Watts", "Duran", "Walters", "Cohen",
    "McDaniel", "Moran", "Parks", "Steele", "Vaughn", "Becker", "Holt", "Deleon", "Barker",
    "Terry", "Hale", "Leon", "Hail", "Benson", "Haynes", "Horton", "Miles", "Lyons", "Pham",
    "Graves", "Bush", "Thornton", "Wolfe", "Warner", "Cabrera", "McKinney", "Mann", "Zimmerman",
    "Dawson", "Lara", "Fletcher", "Page", "McCarthy", "Love", "Robles", "Cervantes", "Solis",
    "Erickson", "Reeves", "Chang", "Klein", "Salinas", "Fuentes", "Baldwin", "Daniel", "Simon",
    "Velasquez", "Hardy", "Higgins", "Aguirre", "Lin", "Cummings", "Chandler", "Sharp",
    "Barber", "Bowen", "Ochoa", "Dennis", "Robbins", "Liu", "Ramsey", "Francis", "Griffith",
    "Paul", "Blair", "Oconnor", "Cardenas", "Pacheco", "Cross", "Calderon", "Quinn", "Moss",
    "Swanson", "Chan", "Rivas", "Khan", "Rodgers", "Serrano", "Fitzgerald", "Rosales",
    "Stevenson", "Christensen", "Manning", "Gill", "Curry", "McLaughlin", "Harmon", "McGee",
    "Gross", "Doyle", "Garner", "Newton", "Burgess", "Reese", "Walton", "Blake", "Trujillo",
    "Adkins", "Brady", "Goodman", "Roman", "Webster", "Goodwin", "Fischer", "Huang", "Potter",
    "Delacruz", "Montoya", "Todd", "Wu", "Hines", "Mullins", "Castaneda", "Malone", "Cannon",
    "Tate", "Mack", "Sherman", "Hubbard", "Hodges", "Zhang", "Guerra", "Wolf", "Valencia",
    "Saunders", "Franco", "Rowe", "Gallagher", "Farmer", "Hammond", "Hampton", "Townsend",
    "Ingram", "Wise", "Gallegos", "Clarke", "Barton", "Schroeder", "Maxwell", "Waters", "Logan",
    "Camacho", "Strickland", "Norman", "Person", "Colon", "Parsons", "Frank", "Harrington",
    "Glover", "Osborne", "Buchanan", "Casey", "Floyd", "Patton", "Ibarra", "Ball", "Tyler",
    "Suarez", "Bowers", "Orozco", "Salas", "Cobb", "Gibbs", "Andrade", "Bauer", "Conner",
    "Moody", "Escobar", "McGuire", "Lloyd", "Mueller", "Hartman", "French", "Kramer", "McBride",
    "Pope", "Lindsey", "Velazquez", "Norton", "McCormick", "Sparks", "Flynn", "Yates", "Hogan",
    "Marsh", "Macias", "Villanueva", "Zamora", "Pratt", "Stokes", "Owen", "Ballard", "Lang",
    "Brock", "Villarreal", "Charles", "Drake", "Barrera", "Cain", "Patrick", "Pineda",
    "Burnett", "Mercado", "Santana", "Shepherd", "Bautista", "Ali", "Shaffer", "Lamb",
    "Trevino", "McKenzie", "Hess", "Beil", "Olsen", "Cochran", "Morton", "Nash", "Wilkins",
    "Petersen", "Briggs", "Shah", "Roth", "Nicholson", "Holloway", "Lozano", "Rangel",
    "Flowers", "Hoover", "Short", "Arias", "Mora", "Valenzuela", "Bryan", "Meyers", "Weiss",
    "Underwood", "Bass", "Greer", "Summers", "Houston", "Carson", "Morrow", "Clayton",
    "Whitaker", "Decker", "Yoder", "Collier", "Zuniga", "Carey", "Wilcox", "Melendez", "Poole",
    "Roberson", "Larsen", "Conley", "Davenport", "Copeland", "Massey", "Lam", "Huff", "Rocha",
    "Cameron", "Jefferson", "Hood", "Monroe", "Anthony", "Pittman", "Huynh", "Gentry", "Rivers",
};

inline constexpr std::array<std::string_view, 24> kHindiGivenNames{
    "Raam",   "Shyaam", "Seeta",  "Geeta",  "Mohan",  "Sohan",  "Radha",   "Lakshmi",
    "Arjun",  "Kiran",  "Priya",  "Anil",   "Sunita", "Vijay",  "Kavita",  "Rajesh",
    "Meena",  "Suresh", "Pooja",  "Ramesh", "Asha",   "Deepak", "Nirmala", "Gopal",
};

inline constexpr std::array<std::string_view, 21> kCities{
    "Tokyo",  "Jakarta",     "Delhi",    "Guangzhou", "Mumbai",  "Manila",   "Shanghai",
    "S\u00e3o Paulo", "Seoul", "Mexico City", "Cairo", "New York", "Dhaka", "Beijing",
    "Kolkata", "Bangkok",    "Shenzhen", "Moscow",    "Buenos Aires", "Lagos", "Bangalore",
};

inline constexpr std::array<std::string_view, 8> kBloodGroups{"A+", "A-",  "B+", "B-",
                                                             "O+", "O-", "AB+", "AB-"};

}  // namespace docarl::corpus
