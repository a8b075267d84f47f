fn main() {
    println!("fingerpose");
}
