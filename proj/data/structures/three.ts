ts 3
constants 1 0 -1
generators
relations
end
